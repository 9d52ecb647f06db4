// Sparse multivariate polynomials with exact rational coefficients.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stemcalc/rational.hpp"

namespace stemcalc {

/// Product of named variables with positive integer exponents; the empty
/// product is the constant monomial 1.  The built-in ordering is the
/// canonical map-key order used for storage, not a term order.
class Monomial {
public:
  using Exponents = std::map<std::string, unsigned>;

  Monomial() = default;
  explicit Monomial(Exponents exponents);

  static Monomial var(const std::string& name, unsigned exponent = 1);

  const Exponents& exponents() const { return exponents_; }
  unsigned exponent_of(const std::string& name) const;
  unsigned total_degree() const;
  bool is_constant() const { return exponents_.empty(); }

  Monomial operator*(const Monomial& o) const;
  /// True when every exponent of *this is <= the matching exponent of m.
  bool divides(const Monomial& m) const;
  /// Quotient m.divide_by(d); requires d.divides(m).
  Monomial divide_by(const Monomial& d) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;

  std::string str() const;

private:
  Exponents exponents_;
};

/// Polynomial as a canonical term map monomial -> nonzero coefficient.
/// Equality is equality of term maps.  A scope (ordered variable list,
/// first occurrence wins) is carried along purely to stabilize printing.
class MultiPoly {
public:
  using Terms = std::map<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(Rational(c)) {}
  MultiPoly(const Rational& c);

  static MultiPoly var(const std::string& name);
  static MultiPoly term(const Rational& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  const std::vector<std::string>& scope() const { return scope_; }
  MultiPoly with_scope(std::vector<std::string> scope) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The coefficient of the constant monomial (0 for the zero polynomial);
  /// requires is_constant().
  Rational constant_value() const;
  Rational coefficient(const Monomial& m) const;
  unsigned total_degree() const;
  std::set<std::string> variables() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Simultaneous substitution of polynomials for variables; unbound
  /// variables are left in place.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;
  /// Full evaluation; every variable present must be bound.
  Rational evaluate(const std::map<std::string, Rational>& values) const;
  /// Renames a variable; the new name must not collide with an existing one.
  MultiPoly rename(const std::string& from, const std::string& to) const;

  /// Canonical text form; parse_poly(str()) reproduces the term map.
  std::string str() const;

private:
  void insert_term(const Monomial& m, const Rational& c);
  void merge_scope(const std::vector<std::string>& other);

  Terms terms_;
  std::vector<std::string> scope_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly substitute(const MultiPoly& p,
                     const std::map<std::string, MultiPoly>& bindings);

}  // namespace stemcalc
