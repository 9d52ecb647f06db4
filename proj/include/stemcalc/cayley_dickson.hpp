// Iterated doubling algebras over a commutative base, starting from the
// split base k x k, with symbolic elements whose coordinates are
// polynomials.  Level n has 2^n coordinates; the first half of an element
// is its level n-1 "a" part and the second half its "b" part.
#pragma once

#include <optional>
#include <vector>

#include "stemcalc/polynomial.hpp"

namespace stemcalc {

/// Doubling parameters: gamma(level) scales the doubling that forms `level`
/// from `level - 1`.  Unlisted levels default to 1 (the split tower).
struct AlgebraSpec {
  std::vector<Rational> gammas;

  static AlgebraSpec split() { return AlgebraSpec{}; }

  Rational gamma(int formed_level) const {
    if (formed_level < 2) throw DomainError("no doubling forms level 1");
    std::size_t i = static_cast<std::size_t>(formed_level - 2);
    return i < gammas.size() ? gammas[i] : Rational(1);
  }
};

/// Element of the level-n algebra; 2^n polynomial coordinates.
class CDElement {
public:
  CDElement(int level, std::vector<MultiPoly> coords);

  static CDElement zero(int level);
  static CDElement unit(int level);
  /// Coordinates prefix1, prefix2, ... as fresh variables.
  static CDElement symbolic(int level, const std::string& prefix);
  static CDElement from_rationals(int level, const std::vector<Rational>& v);
  /// Basis element with a single coordinate set to 1.
  static CDElement basis(int level, std::size_t index);

  int level() const { return level_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<MultiPoly>& coords() const { return coords_; }

  CDElement first_half() const;
  CDElement second_half() const;
  static CDElement join(const CDElement& a, const CDElement& b);

  bool is_zero() const;
  CDElement operator-() const;
  CDElement operator+(const CDElement& o) const;
  CDElement operator-(const CDElement& o) const;
  CDElement scaled(const Rational& c) const;
  bool operator==(const CDElement& o) const;

  /// "[c0, c1, ...]" with polynomial coordinates.
  std::string str() const;

private:
  int level_;
  std::vector<MultiPoly> coords_;
};

CDElement cd_multiply(const CDElement& x, const CDElement& y,
                      const AlgebraSpec& spec);
CDElement conjugate(const CDElement& x);
MultiPoly norm(const CDElement& x, const AlgebraSpec& spec);
MultiPoly trace(const CDElement& x);

/// Scales the second half of x by t; t must live one level below x.
CDElement theta(const CDElement& t, const CDElement& x,
                const AlgebraSpec& spec);

/// Projection of a level-2 element (a1, a2, b1, b2) to the level-1 element
/// (a1, b2).
CDElement omega(const CDElement& x);
/// Twisted action of a level-2 element u on a level-1 element p:
/// (a1*p1 - p2*b1, p2*a2 + b2*p1).
CDElement mu_prime(const CDElement& u, const CDElement& p);

/// 2x2 polynomial matrix.
struct Matrix2 {
  MultiPoly a, b, c, d;

  Matrix2 operator*(const Matrix2& o) const;
  bool operator==(const Matrix2& o) const;
  MultiPoly det() const;
  Matrix2 adjugate() const;
};

/// Level-2 element (a1, a2, b1, b2) as the matrix [[a1, b1], [-b2, a2]].
Matrix2 to_matrix(const CDElement& x);

enum class CDProperty {
  Normed,
  Associative,
  Commutative,
  AntiAutomorphism,
  Alternative,
};

/// Outcome of a property check.  When the property fails symbolically, a
/// deterministic search produces the first rational counterexample in a
/// support-graded scan with values drawn from {1, -1, 2, -2}.
struct PropertyReport {
  bool holds = false;
  std::optional<std::vector<std::vector<Rational>>> witness;
  std::string note;
};

PropertyReport check_property(const AlgebraSpec& spec, int level,
                              CDProperty property);

/// Named sub-checks bundled into one verdict.
struct CheckReport {
  struct Item {
    std::string name;
    bool ok;
    std::string note;
  };
  std::vector<Item> items;
  bool all_ok() const {
    for (const auto& i : items)
      if (!i.ok) return false;
    return true;
  }
};

/// Second-half scaling by a norm-one parameter: multiplicative and
/// norm-preserving modulo (n(t) - 1), involution-preserving exactly.
/// `upper_level` is the level of the scaled elements (>= 2).
CheckReport check_theta(const AlgebraSpec& spec, int upper_level);

/// The level-2 projection omega intertwines multiplication with the twisted
/// action mu_prime, which is itself an action.
CheckReport check_omega_splitting(const AlgebraSpec& spec);

/// The matrix model of level 2: multiplicative, determinant = norm,
/// adjugate = conjugate.
CheckReport check_sl2_model(const AlgebraSpec& spec);

}  // namespace stemcalc
