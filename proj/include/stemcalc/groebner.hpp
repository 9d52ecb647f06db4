// Buchberger's algorithm with reduced bases, normal forms, and the
// membership tests built on them.
#pragma once

#include <utility>
#include <vector>

#include "stemcalc/polynomial.hpp"

namespace stemcalc {

enum class OrderKind { Grevlex, Lex };

/// Monomial order induced by an explicit variable list (earlier = larger).
/// Grevlex: higher total degree wins; on ties the last nonzero entry of the
/// exponent difference decides (negative means larger).  Lex: the first
/// nonzero entry of the exponent difference decides (positive means larger).
class TermOrder {
public:
  TermOrder(OrderKind kind, std::vector<std::string> variables);

  static TermOrder grevlex(std::vector<std::string> variables) {
    return TermOrder(OrderKind::Grevlex, std::move(variables));
  }
  static TermOrder lex(std::vector<std::string> variables) {
    return TermOrder(OrderKind::Lex, std::move(variables));
  }

  OrderKind kind() const { return kind_; }
  const std::vector<std::string>& variables() const { return variables_; }

  /// Strict comparison a < b; both monomials must use covered variables.
  bool less(const Monomial& a, const Monomial& b) const;

  /// Same order with any uncovered variables of `polys` appended in name
  /// order (hence smaller than every listed variable block position).
  TermOrder extended_for(const std::vector<MultiPoly>& polys) const;

private:
  OrderKind kind_;
  std::vector<std::string> variables_;
};

/// Finitely generated ideal; zero generators are dropped.
struct Ideal {
  explicit Ideal(std::vector<MultiPoly> gens);

  std::vector<MultiPoly> generators;
  std::set<std::string> variables() const;
};

/// A reduced Groebner basis: monic, autoreduced, sorted by leading monomial.
class GroebnerBasis {
public:
  GroebnerBasis(std::vector<MultiPoly> polys, TermOrder order)
      : polys_(std::move(polys)), order_(std::move(order)) {}

  const std::vector<MultiPoly>& polys() const { return polys_; }
  const TermOrder& order() const { return order_; }

private:
  std::vector<MultiPoly> polys_;
  TermOrder order_;
};

inline constexpr int kDefaultMaxPairs = 10000;

/// Leading monomial and coefficient of a nonzero polynomial.
std::pair<Monomial, Rational> leading_term(const MultiPoly& p,
                                           const TermOrder& order);

/// Reduced Groebner basis of the ideal.  The order is extended to cover all
/// generator variables.  Throws ResourceLimitError once more than max_pairs
/// S-pairs have been examined.
GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order,
                         int max_pairs = kDefaultMaxPairs);
/// Same, with the default order: grevlex over the ideal's variables in name
/// order.
GroebnerBasis buchberger(const Ideal& ideal,
                         int max_pairs = kDefaultMaxPairs);

/// Full normal form: no monomial of the result is divisible by any basis
/// leading monomial.
MultiPoly reduce(const MultiPoly& p, const GroebnerBasis& basis);

bool ideal_membership(const MultiPoly& p, const Ideal& ideal,
                      const TermOrder& order,
                      int max_pairs = kDefaultMaxPairs);
bool ideal_membership(const MultiPoly& p, const Ideal& ideal,
                      int max_pairs = kDefaultMaxPairs);

bool is_unit_ideal(const Ideal& ideal, const TermOrder& order,
                   int max_pairs = kDefaultMaxPairs);
bool is_unit_ideal(const Ideal& ideal, int max_pairs = kDefaultMaxPairs);

/// Whether some power of p lies in the ideal, decided by adjoining a fresh
/// inverse variable for p and testing for the unit ideal.
bool radical_membership(const MultiPoly& p, const Ideal& ideal,
                        const TermOrder& order,
                        int max_pairs = kDefaultMaxPairs);
bool radical_membership(const MultiPoly& p, const Ideal& ideal,
                        int max_pairs = kDefaultMaxPairs);

/// Post-check used by tests: every S-polynomial of the basis reduces to zero
/// and the basis is monic and autoreduced.
bool verify_groebner(const GroebnerBasis& basis);

/// A variable name based on `prefix` that avoids every name in `taken`.
std::string gensym(const std::string& prefix,
                   const std::set<std::string>& taken);

}  // namespace stemcalc
