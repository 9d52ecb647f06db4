// The graded-degree-zero coefficient ring: noncommutative words in the
// generators eta and rho[a] (a a nonzero rational) with integer
// coefficients, a terminating rewrite system deciding the {eta, rho}
// subring, and the general four-rule simplifier.
//
// eps is parsing/printing sugar for -1 - rho*eta and is expanded on input
// and re-folded on output.
#pragma once

#include <map>
#include <vector>

#include "stemcalc/rational.hpp"

namespace stemcalc {

/// A single generator letter: eta, or rho with a nonzero rational
/// subscript.  rho with subscript -1 is the distinguished rho.
struct MWGenerator {
  enum class Kind { Eta, Rho };

  Kind kind;
  Rational subscript;  // meaningful for Rho only

  static MWGenerator eta() { return {Kind::Eta, Rational(0)}; }
  static MWGenerator rho(const Rational& a) {
    if (a.is_zero()) throw DomainError("rho subscript must be nonzero");
    return {Kind::Rho, a};
  }
  static MWGenerator rho_default() { return rho(Rational(-1)); }

  bool is_eta() const { return kind == Kind::Eta; }
  bool is_rho() const { return kind == Kind::Rho; }
  bool is_default_rho() const {
    return is_rho() && subscript == Rational(-1);
  }

  bool operator==(const MWGenerator& o) const {
    return kind == o.kind && (!is_rho() || subscript == o.subscript);
  }
  bool operator<(const MWGenerator& o) const {
    if (kind != o.kind) return kind < o.kind;
    return is_rho() && subscript < o.subscript;
  }
};

/// Ordered word of generators; the empty word is the unit.
struct MWWord {
  std::vector<MWGenerator> letters;

  static MWWord one() { return {}; }
  /// i copies of rho followed by j copies of eta.
  static MWWord rho_eta(unsigned i, unsigned j);

  MWWord operator*(const MWWord& o) const;
  bool operator==(const MWWord& o) const { return letters == o.letters; }
  bool operator<(const MWWord& o) const;

  std::string str() const;
};

/// Integer linear combination of words.
class MWElement {
public:
  using Terms = std::map<MWWord, BigInt>;

  MWElement() = default;
  MWElement(int c) : MWElement(BigInt(c)) {}
  MWElement(const BigInt& c);

  static MWElement generator(const MWGenerator& g);
  static MWElement word(const MWWord& w);
  static MWElement eta() { return generator(MWGenerator::eta()); }
  static MWElement rho() { return generator(MWGenerator::rho_default()); }
  static MWElement rho_sub(const Rational& a) {
    return generator(MWGenerator::rho(a));
  }
  /// -1 - rho*eta.
  static MWElement eps();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const MWWord& w) const;

  MWElement operator-() const;
  MWElement operator+(const MWElement& o) const;
  MWElement operator-(const MWElement& o) const;
  MWElement operator*(const MWElement& o) const;
  MWElement& operator+=(const MWElement& o) { return *this = *this + o; }
  MWElement& operator-=(const MWElement& o) { return *this = *this - o; }
  MWElement& operator*=(const MWElement& o) { return *this = *this * o; }
  MWElement pow(unsigned e) const;
  MWElement scaled(const BigInt& c) const;

  bool operator==(const MWElement& o) const { return terms_ == o.terms_; }

  /// Every letter is eta or the default rho.
  bool in_subring() const;

  /// Canonical text; the rho*eta word is folded back into eps.
  std::string str() const;

private:
  Terms terms_;
};

/// Parses words in eta, rho, rho[a], eps with integer coefficients, +, -,
/// *, ^, and parentheses; no juxtaposition.
MWElement parse_expr(const std::string& text);

/// Normal form in the {eta, rho} subring: every word becomes rho^i eta^j
/// with i or j at most 1 apart via the two defining rewrites.  Throws
/// SubringError outside the subring.
MWElement normalize(const MWElement& e);

/// Equality in the subring (normal forms agree).
bool equals(const MWElement& a, const MWElement& b);

/// Four-rule simplifier for the full generator alphabet, applied in a
/// fixed order to a fixpoint (or to the step bound, returning the current
/// reduct): drop words with rho[1]; drop words with an adjacent pair
/// rho[a] rho[1-a]; move every eta to the right end of its word; expand
/// the leftmost rho whose integer subscript is neither -1 nor a positive
/// prime by splitting off its smallest factor.
MWElement simplify_general(const MWElement& e, int max_steps = 10000);

/// Class of the n-th power self-map; computed by the two-sided recursion
/// and cross-checked against the closed form.
MWElement power_map_class(long long n);

/// Class of the diagonal in bidegree (p, q): zero above the line, the
/// twisted q-fold rho power on it.  Requires p >= q >= 0.
MWElement diagonal_class(long long p, long long q);

namespace mw_detail {

/// Single-order normalization used by the confluence check: prefer the
/// (rho eta^2 -> -2 eta) rule or the (rho^2 eta -> -2 rho) rule first.
MWElement normalize_preferring(const MWElement& e, bool rho_square_first);

/// Right-hand side of the subscript product expansion
/// rho[a*b] -> rho[a] + rho[b] + rho[a]*rho[b]*eta (eta written last).
MWElement expand_product_subscript(const Rational& a, const Rational& b);

}  // namespace mw_detail

}  // namespace stemcalc
