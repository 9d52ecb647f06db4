// Text form of polynomials.
//
// Grammar (whitespace insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' nat)?
//   atom   := number | ident | '(' expr ')'
//   number := digits ('/' digits)?
//   ident  := [A-Za-z_][A-Za-z0-9_]*
//
// There is no juxtaposition product: "2x" is invalid, "2*x" is required.
#pragma once

#include <string>

#include "stemcalc/polynomial.hpp"

namespace stemcalc {

/// Parses the grammar above; throws ParseError on malformed input.
MultiPoly parse_poly(const std::string& text);

}  // namespace stemcalc
