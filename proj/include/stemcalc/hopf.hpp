// Graded calculus for Hopf classes: bidegrees, the commutation sign tau,
// melding of Hopf invariants, replayable derivation traces, and a finite
// pointed-set model for the diagonal-defect map.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stemcalc/errors.hpp"
#include "stemcalc/mw_ring.hpp"
#include "stemcalc/rational.hpp"

namespace stemcalc {

// Integer bidegree (p, q) of a stable class.
struct Bidegree {
  long long p = 0;
  long long q = 0;

  Bidegree operator+(const Bidegree& o) const { return {p + o.p, q + o.q}; }
  Bidegree operator-(const Bidegree& o) const { return {p - o.p, q - o.q}; }
  bool operator==(const Bidegree& o) const = default;
  std::string str() const;
};

// Commutation factor: moving a class of bidegree a past one of bidegree b
// multiplies by tau(a, b) = (-1)^((a.p-a.q)(b.p-b.q)) * eps^(a.q*b.q).
// The value is one of {1, -1, eps, -eps} as a degree-zero coefficient.
MWElement tau(const Bidegree& a, const Bidegree& b);

// A named graded class; `value` is set for classes that live in the
// coefficient ring's distinguished subring and can be folded into words.
struct GradedSymbol {
  std::string name;
  Bidegree degree;
  std::optional<MWElement> value;
};

// Registry of graded symbols used by an expression or a derivation.
class SymbolTable {
 public:
  // Table with eta, nu, sigma, rho, and eps pre-registered.
  static SymbolTable builtins();

  void add(const GradedSymbol& s);  // DomainError on duplicate names
  bool has(const std::string& name) const;
  const GradedSymbol& get(const std::string& name) const;  // DomainError
  Bidegree degree_of(const std::vector<std::string>& word) const;

 private:
  std::map<std::string, GradedSymbol> symbols_;
};

using GradedWord = std::vector<std::string>;

// Finite sum of formal words of graded symbols with degree-zero
// coefficients.  Coefficients are kept in normal form (an integer plus a
// multiple of the one mixed degree-zero word); words are compared as raw
// letter sequences, so reordering is an explicit, tau-weighted operation.
class GradedExpression {
 public:
  using Terms = std::map<GradedWord, MWElement>;

  GradedExpression() = default;
  static GradedExpression zero() { return {}; }
  static GradedExpression word(const GradedWord& w);
  static GradedExpression letter(const std::string& name);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MWElement coefficient(const GradedWord& w) const;

  GradedExpression operator-() const;
  GradedExpression operator+(const GradedExpression& o) const;
  GradedExpression operator-(const GradedExpression& o) const;
  GradedExpression operator*(const GradedExpression& o) const;
  GradedExpression& operator+=(const GradedExpression& o);
  GradedExpression scaled(const MWElement& c) const;
  bool operator==(const GradedExpression& o) const = default;

  std::string str() const;

 private:
  void insert(const GradedWord& w, const MWElement& c);
  Terms terms_;
};

// Common bidegree of every word of `e`; DomainError if `e` is zero or
// mixes bidegrees.
Bidegree degree_of(const GradedExpression& e, const SymbolTable& table);

// Swap the letters at positions index and index+1 of every word,
// multiplying each coefficient by the tau factor of the crossed pair.
GradedExpression commute(const GradedExpression& e, const SymbolTable& table,
                         std::size_t index);

// Class of f smashed with the identity of a sphere of the given bidegree;
// smashing on the right costs the tau factor of sliding f past the sphere.
GradedExpression smash_class(const std::string& symbol,
                             const SymbolTable& table, const Bidegree& sphere,
                             bool sphere_on_right);

// Replace every occurrence of the letter `symbol` by `replacement`.
GradedExpression substitute_symbol(const GradedExpression& e,
                                   const std::string& symbol,
                                   const GradedExpression& replacement);

// Rewrite the degree-zero coefficients into word letters: a coefficient
// a + b*(rho eta) becomes a plus b times the two-letter prefix rho, eta.
GradedExpression expand_eps(const GradedExpression& e);

// Fold maximal runs of subring-valued letters (and the coefficient, for a
// run at the front of its word) through the coefficient-ring rewrite
// system, re-expanding normal forms as letters in place.
GradedExpression normalize_graded(const GradedExpression& e,
                                  const SymbolTable& table);

// Rewrite every contiguous occurrence of the single word of `lhs` (which
// must have coefficient 1) into `rhs`.
GradedExpression apply_fact_rewrite(const GradedExpression& e,
                                    const GradedExpression& lhs,
                                    const GradedExpression& rhs);

// Inputs of the melding formula for the Hopf class of a join of two maps:
// f with invariant Hf and stabilization fstar, g with invariant Hg and
// stabilization gstar, over a diagonal defect Delta; X is the source cell,
// Y1/Y2 the two target cells of f and g, Z1/Z2 the corresponding
// suspension cells.
struct MeldInput {
  GradedExpression Hf, fstar, Hg, gstar, Delta;
  Bidegree X, Y1, Y2, Z1, Z2;
};

// tau(X+Y1-Z1, Z2) * Hf * gstar
//   + tau(X, Y1) * tau(Y1-Z1, Z2) * fstar * Hg
//   + tau(X, Y2) * tau(X+Y1-Z1, Z2) * Hf * Hg * Delta.
GradedExpression meld_hopf(const MeldInput& in);

// ---------------------------------------------------------------------------
// Derivation traces.

struct MeldParams {
  MeldInput in;
};
struct CommuteParams {
  std::size_t index = 0;
};
struct SmashParams {
  std::string symbol;
  Bidegree sphere;
  bool sphere_on_right = false;
};
struct NormalizeParams {};
struct SubstituteParams {
  std::string symbol;
  GradedExpression replacement;
};
struct CancelParams {
  BigInt n;
};
struct ScaleParams {
  MWElement c;
  GradedExpression e;
};
struct FactParams {
  std::string name;
};

using StepParams =
    std::variant<std::monostate, MeldParams, CommuteParams, SmashParams,
                 NormalizeParams, SubstituteParams, CancelParams, ScaleParams,
                 FactParams>;

// One inference: `rule` picks the replay semantics, `ref` names the
// mathematical justification, and the step asserts before ~ after.
struct Step {
  std::string rule;
  std::string ref;
  GradedExpression before;
  GradedExpression after;
  StepParams params;
};

struct DerivationTrace {
  std::string name;
  SymbolTable symbols;
  std::vector<Step> steps;
};

// Named relations established by completed derivations (lhs ~ rhs).
class FactStore {
 public:
  void add(const std::string& name, const GradedExpression& lhs,
           const GradedExpression& rhs);
  bool has(const std::string& name) const;
  std::pair<GradedExpression, GradedExpression> get(
      const std::string& name) const;  // PreconditionError if absent

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::pair<GradedExpression, GradedExpression>> facts_;
};

// Re-run a trace from scratch: computational steps are recomputed and
// compared against their recorded result, cited inputs are accepted, and
// equalities accumulate in a union-find; "conclude" and "fact" steps check
// that their equality has actually been established, and "fact" steps
// register it in `facts`.  Throws InternalError on any mismatch and
// PreconditionError on a missing prerequisite fact.
void replay(const DerivationTrace& trace, FactStore& facts);

// One-line summary of a step's parameters for reporting.
std::string step_params_summary(const Step& step);

// The three packaged derivations.  Each builds its trace, replays it
// against `facts` (registering what it proves), and returns it.
DerivationTrace derive_eta_nu(FactStore& facts);
DerivationTrace derive_nu_sigma(FactStore& facts);
DerivationTrace derive_epsilon_nu(FactStore& facts);  // needs "eta*nu=0"

// Coefficient of the twist permutation on a 2^n-cell smash power: the
// n-fold twist sign eps^(n*n) times the n-th power of the distinguished
// negative-weight generator, in normal form.
MWElement ring_spectrum_square(long long n);  // DomainError if n < 0

// ---------------------------------------------------------------------------
// Finite pointed-set model.

// Integral matrix of the diagonal-defect map from a smash of finite
// pointed sets (m and n non-base points) into the product, determined by
// composing with the smash quotient and the two projections.
struct FiniteChiReport {
  std::size_t m = 0, n = 0;
  std::vector<std::string> row_labels;  // product non-base points
  std::vector<std::string> col_labels;  // smash non-base points
  std::vector<std::vector<Rational>> chi;  // row-major, integral entries
  bool unique_in_box = false;  // brute-force check over entries in [-2, 2]
};

FiniteChiReport finite_chi(std::size_t m, std::size_t n);

// Composites for the two-point case: h_mu is the fold map applied after
// the diagonal defect, p_compose the smash quotient after it, and
// pi1_compose the first projection after it.
struct HopfMuReport {
  BigInt h_mu;
  BigInt p_compose;
  BigInt pi1_compose;
};

HopfMuReport hopf_mu_s0();

}  // namespace stemcalc
