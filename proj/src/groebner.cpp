#include "stemcalc/groebner.hpp"

#include <algorithm>
#include <deque>

namespace stemcalc {

TermOrder::TermOrder(OrderKind kind, std::vector<std::string> variables)
    : kind_(kind), variables_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : variables_)
    if (!seen.insert(v).second)
      throw DomainError("term order lists variable twice: " + v);
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
  for (const auto& [name, e] : a.exponents())
    if (std::find(variables_.begin(), variables_.end(), name) ==
        variables_.end())
      throw DomainError("term order does not cover variable " + name);
  for (const auto& [name, e] : b.exponents())
    if (std::find(variables_.begin(), variables_.end(), name) ==
        variables_.end())
      throw DomainError("term order does not cover variable " + name);

  if (kind_ == OrderKind::Grevlex) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Last nonzero entry of exponents(a) - exponents(b): negative means
    // a is the larger monomial.
    for (auto it = variables_.rbegin(); it != variables_.rend(); ++it) {
      int d = static_cast<int>(a.exponent_of(*it)) -
              static_cast<int>(b.exponent_of(*it));
      if (d != 0) return d > 0;
    }
    return false;
  }
  // Lex: first nonzero entry decides, positive means a is larger.
  for (const auto& v : variables_) {
    int d = static_cast<int>(a.exponent_of(v)) -
            static_cast<int>(b.exponent_of(v));
    if (d != 0) return d < 0;
  }
  return false;
}

TermOrder TermOrder::extended_for(const std::vector<MultiPoly>& polys) const {
  std::set<std::string> missing;
  for (const auto& p : polys)
    for (const auto& v : p.variables()) missing.insert(v);
  for (const auto& v : variables_) missing.erase(v);
  std::vector<std::string> vars = variables_;
  vars.insert(vars.end(), missing.begin(), missing.end());
  return TermOrder(kind_, std::move(vars));
}

Ideal::Ideal(std::vector<MultiPoly> gens) {
  for (auto& g : gens)
    if (!g.is_zero()) generators.push_back(std::move(g));
}

std::set<std::string> Ideal::variables() const {
  std::set<std::string> vars;
  for (const auto& g : generators)
    for (const auto& v : g.variables()) vars.insert(v);
  return vars;
}

std::pair<Monomial, Rational> leading_term(const MultiPoly& p,
                                           const TermOrder& order) {
  if (p.is_zero()) throw InternalError("leading term of zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

namespace {

MultiPoly reduce_full(MultiPoly p, const std::vector<MultiPoly>& gens,
                      const TermOrder& order) {
  MultiPoly remainder;
  while (!p.is_zero()) {
    auto [lm, lc] = leading_term(p, order);
    bool divided = false;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      auto [glm, glc] = leading_term(g, order);
      if (glm.divides(lm)) {
        p -= g * MultiPoly::term(lc / glc, lm.divide_by(glm));
        divided = true;
        break;
      }
    }
    if (!divided) {
      MultiPoly lead = MultiPoly::term(lc, lm);
      remainder += lead;
      p -= lead;
    }
  }
  return remainder;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g,
                       const TermOrder& order) {
  auto [fm, fc] = leading_term(f, order);
  auto [gm, gc] = leading_term(g, order);
  Monomial l = Monomial::lcm(fm, gm);
  return f * MultiPoly::term(fc.inverse(), l.divide_by(fm)) -
         g * MultiPoly::term(gc.inverse(), l.divide_by(gm));
}

std::vector<MultiPoly> without_index(const std::vector<MultiPoly>& v,
                                     std::size_t skip) {
  std::vector<MultiPoly> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != skip) out.push_back(v[i]);
  return out;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order,
                         int max_pairs) {
  TermOrder ord = order.extended_for(ideal.generators);
  std::vector<MultiPoly> basis = ideal.generators;

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  int examined = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (++examined > max_pairs)
      throw ResourceLimitError("S-pair budget of " +
                               std::to_string(max_pairs) + " exhausted");

    auto [mi, ci] = leading_term(basis[i], ord);
    auto [mj, cj] = leading_term(basis[j], ord);
    // Product criterion: coprime leading monomials give a trivial S-pair.
    if (Monomial::lcm(mi, mj) == mi * mj) continue;

    MultiPoly s = reduce_full(s_polynomial(basis[i], basis[j], ord), basis, ord);
    if (s.is_zero()) continue;
    basis.push_back(s);
    for (std::size_t k = 0; k + 1 < basis.size(); ++k)
      pairs.emplace_back(k, basis.size() - 1);
  }

  // Autoreduce to the canonical basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      MultiPoly r = reduce_full(basis[i], without_index(basis, i), ord);
      if (r == basis[i]) continue;
      changed = true;
      if (r.is_zero())
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      else
        basis[i] = r;
      break;
    }
  }

  for (auto& g : basis) g = g.scaled(leading_term(g, ord).second.inverse());
  std::sort(basis.begin(), basis.end(),
            [&](const MultiPoly& a, const MultiPoly& b) {
              return ord.less(leading_term(a, ord).first,
                              leading_term(b, ord).first);
            });
  return GroebnerBasis(std::move(basis), std::move(ord));
}

GroebnerBasis buchberger(const Ideal& ideal, int max_pairs) {
  auto vars = ideal.variables();
  return buchberger(
      ideal, TermOrder::grevlex({vars.begin(), vars.end()}), max_pairs);
}

MultiPoly reduce(const MultiPoly& p, const GroebnerBasis& basis) {
  TermOrder ord = basis.order().extended_for({p});
  return reduce_full(p, basis.polys(), ord);
}

bool ideal_membership(const MultiPoly& p, const Ideal& ideal,
                      const TermOrder& order, int max_pairs) {
  return reduce(p, buchberger(ideal, order, max_pairs)).is_zero();
}

bool ideal_membership(const MultiPoly& p, const Ideal& ideal, int max_pairs) {
  return reduce(p, buchberger(ideal, max_pairs)).is_zero();
}

bool is_unit_ideal(const Ideal& ideal, const TermOrder& order, int max_pairs) {
  GroebnerBasis gb = buchberger(ideal, order, max_pairs);
  return gb.polys().size() == 1 && gb.polys()[0] == MultiPoly(1);
}

bool is_unit_ideal(const Ideal& ideal, int max_pairs) {
  auto vars = ideal.variables();
  return is_unit_ideal(ideal, TermOrder::grevlex({vars.begin(), vars.end()}),
                       max_pairs);
}

bool radical_membership(const MultiPoly& p, const Ideal& ideal,
                        const TermOrder& order, int max_pairs) {
  if (p.is_zero()) return true;
  std::set<std::string> taken = ideal.variables();
  for (const auto& v : p.variables()) taken.insert(v);
  std::string w = gensym("w", taken);

  // 1 - w*p becomes a generator; p has a power in the ideal exactly when
  // the extended ideal is the unit ideal.
  std::vector<MultiPoly> gens = ideal.generators;
  gens.push_back(MultiPoly(1) - MultiPoly::var(w) * p);
  Ideal extended(std::move(gens));
  TermOrder ord = order.extended_for(extended.generators);
  return is_unit_ideal(extended, ord, max_pairs);
}

bool radical_membership(const MultiPoly& p, const Ideal& ideal,
                        int max_pairs) {
  auto vars = ideal.variables();
  return radical_membership(
      p, ideal, TermOrder::grevlex({vars.begin(), vars.end()}), max_pairs);
}

bool verify_groebner(const GroebnerBasis& basis) {
  const auto& g = basis.polys();
  const TermOrder& ord = basis.order();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) return false;
    if (leading_term(g[i], ord).second != Rational(1)) return false;
    // Autoreduced: no monomial of g[i] divisible by another leading monomial.
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      auto [lmj, lcj] = leading_term(g[j], ord);
      for (const auto& [m, c] : g[i].terms())
        if (lmj.divides(m)) return false;
    }
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!reduce_full(s_polynomial(g[i], g[j], ord), g, ord).is_zero())
        return false;
  }
  return true;
}

std::string gensym(const std::string& prefix,
                   const std::set<std::string>& taken) {
  if (!taken.count(prefix)) return prefix;
  for (int i = 1;; ++i) {
    std::string candidate = prefix + "_" + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

}  // namespace stemcalc
