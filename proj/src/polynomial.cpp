#include "stemcalc/polynomial.hpp"

#include <algorithm>

namespace stemcalc {

Monomial::Monomial(Exponents exponents) : exponents_(std::move(exponents)) {
  for (auto it = exponents_.begin(); it != exponents_.end();) {
    if (it->first.empty()) throw DomainError("monomial with empty variable name");
    if (it->second == 0)
      it = exponents_.erase(it);
    else
      ++it;
  }
}

Monomial Monomial::var(const std::string& name, unsigned exponent) {
  Exponents e;
  if (exponent > 0) e[name] = exponent;
  if (name.empty()) throw DomainError("monomial with empty variable name");
  return Monomial(std::move(e));
}

unsigned Monomial::exponent_of(const std::string& name) const {
  auto it = exponents_.find(name);
  return it == exponents_.end() ? 0u : it->second;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [name, e] : exponents_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Exponents e = exponents_;
  for (const auto& [name, k] : o.exponents_) e[name] += k;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& m) const {
  for (const auto& [name, e] : exponents_)
    if (m.exponent_of(name) < e) return false;
  return true;
}

Monomial Monomial::divide_by(const Monomial& d) const {
  if (!d.divides(*this)) throw DomainError("monomial quotient does not exist");
  Exponents e = exponents_;
  for (const auto& [name, k] : d.exponents_) {
    unsigned& mine = e[name];
    mine -= k;
    if (mine == 0) e.erase(name);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Exponents e = a.exponents_;
  for (const auto& [name, k] : b.exponents_) {
    unsigned& mine = e[name];
    mine = std::max(mine, k);
  }
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  if (exponents_.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : exponents_) {
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_[Monomial()] = c;
}

MultiPoly MultiPoly::var(const std::string& name) {
  MultiPoly p;
  p.terms_[Monomial::var(name)] = Rational(1);
  p.scope_ = {name};
  return p;
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_[m] = c;
  for (const auto& [name, e] : m.exponents()) p.scope_.push_back(name);
  return p;
}

MultiPoly MultiPoly::with_scope(std::vector<std::string> scope) const {
  MultiPoly p = *this;
  p.scope_ = std::move(scope);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::set<std::string> MultiPoly::variables() const {
  std::set<std::string> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m.exponents()) vars.insert(name);
  return vars;
}

void MultiPoly::insert_term(const Monomial& m, const Rational& c) {
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (c.is_zero()) {
    terms_.erase(it);
  }
}

void MultiPoly::merge_scope(const std::vector<std::string>& other) {
  for (const auto& name : other)
    if (std::find(scope_.begin(), scope_.end(), name) == scope_.end())
      scope_.push_back(name);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p;
  p.scope_ = scope_;
  for (const auto& [m, c] : terms_) p.terms_[m] = -c;
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly p = *this;
  p.merge_scope(o.scope_);
  for (const auto& [m, c] : o.terms_) p.insert_term(m, c);
  return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly p = *this;
  p.merge_scope(o.scope_);
  for (const auto& [m, c] : o.terms_) p.insert_term(m, -c);
  return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly p;
  p.scope_ = scope_;
  p.merge_scope(o.scope_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) p.insert_term(ma * mb, ca * cb);
  return p;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly p;
  p.scope_ = scope_;
  if (c.is_zero()) return p;
  for (const auto& [m, k] : terms_) p.terms_[m] = k * c;
  return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(1), b = *this;
  r.scope_ = scope_;
  for (; e; e >>= 1, b *= b)
    if (e & 1) r *= b;
  return r;
}

MultiPoly MultiPoly::substitute(
    const std::map<std::string, MultiPoly>& bindings) const {
  MultiPoly out;
  out.scope_ = scope_;
  for (const auto& [m, c] : terms_) {
    MultiPoly term_value{c};
    for (const auto& [name, e] : m.exponents()) {
      auto it = bindings.find(name);
      MultiPoly base =
          it == bindings.end() ? MultiPoly::var(name) : it->second;
      term_value *= base.pow(e);
    }
    out += term_value;
  }
  return out;
}

Rational MultiPoly::evaluate(
    const std::map<std::string, Rational>& values) const {
  Rational out(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [name, e] : m.exponents()) {
      auto it = values.find(name);
      if (it == values.end())
        throw DomainError("evaluate: unbound variable " + name);
      v *= it->second.pow(e);
    }
    out += v;
  }
  return out;
}

MultiPoly MultiPoly::rename(const std::string& from,
                            const std::string& to) const {
  if (from == to) return *this;
  if (variables().count(to))
    throw DomainError("rename: target variable " + to + " already in use");
  return substitute({{from, MultiPoly::var(to)}});
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";

  // Print variables inside a monomial in scope order, then the terms in
  // descending graded order over that same variable order.
  std::vector<std::string> order = scope_;
  for (const auto& name : variables())
    if (std::find(order.begin(), order.end(), name) == order.end())
      order.push_back(name);

  auto exponent_key = [&](const Monomial& m) {
    std::vector<unsigned> key;
    key.reserve(order.size());
    for (const auto& name : order) key.push_back(m.exponent_of(name));
    return key;
  };

  std::vector<const Terms::value_type*> seq;
  seq.reserve(terms_.size());
  for (const auto& t : terms_) seq.push_back(&t);
  std::sort(seq.begin(), seq.end(), [&](const auto* a, const auto* b) {
    unsigned da = a->first.total_degree(), db = b->first.total_degree();
    if (da != db) return da > db;
    return exponent_key(a->first) > exponent_key(b->first);
  });

  auto monomial_str = [&](const Monomial& m) {
    std::string out;
    for (const auto& name : order) {
      unsigned e = m.exponent_of(name);
      if (e == 0) continue;
      if (!out.empty()) out += "*";
      out += name;
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  };

  std::string out;
  for (const auto* t : seq) {
    const auto& [m, c] = *t;
    Rational abs = c.sign() < 0 ? -c : c;
    std::string body = monomial_str(m);
    std::string piece;
    if (body.empty())
      piece = abs.str();
    else if (abs == Rational(1))
      piece = body;
    else
      piece = abs.str() + "*" + body;
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + piece;
    else
      out += (c.sign() < 0 ? " - " : " + ") + piece;
  }
  return out;
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly substitute(const MultiPoly& p,
                     const std::map<std::string, MultiPoly>& bindings) {
  return p.substitute(bindings);
}

}  // namespace stemcalc
