// Graded Hopf-class calculus: commutation signs, melding, replayable
// derivations, and the finite pointed-set model.
#include "stemcalc/hopf.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace stemcalc {

namespace {

bool odd(long long v) { return ((v % 2) + 2) % 2 == 1; }

std::string join_word(const GradedWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += w[i];
  }
  return s;
}

}  // namespace

std::string Bidegree::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

MWElement tau(const Bidegree& a, const Bidegree& b) {
  bool negate = odd((a.p - a.q) * (b.p - b.q));
  MWElement r = odd(a.q * b.q) ? MWElement::eps() : MWElement(1);
  return negate ? r.scaled(-1) : r;
}

SymbolTable SymbolTable::builtins() {
  SymbolTable t;
  t.add({"eta", {1, 1}, MWElement::eta()});
  t.add({"nu", {3, 2}, std::nullopt});
  t.add({"sigma", {7, 4}, std::nullopt});
  t.add({"rho", {-1, -1}, MWElement::rho()});
  t.add({"eps", {0, 0}, MWElement::eps()});
  return t;
}

void SymbolTable::add(const GradedSymbol& s) {
  if (symbols_.count(s.name))
    throw DomainError("symbol '" + s.name + "' is already registered");
  symbols_.emplace(s.name, s);
}

bool SymbolTable::has(const std::string& name) const {
  return symbols_.count(name) != 0;
}

const GradedSymbol& SymbolTable::get(const std::string& name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end())
    throw DomainError("unknown graded symbol '" + name + "'");
  return it->second;
}

Bidegree SymbolTable::degree_of(const std::vector<std::string>& word) const {
  Bidegree d;
  for (const auto& name : word) d = d + get(name).degree;
  return d;
}

GradedExpression GradedExpression::word(const GradedWord& w) {
  GradedExpression e;
  e.insert(w, MWElement(1));
  return e;
}

GradedExpression GradedExpression::letter(const std::string& name) {
  return word(GradedWord{name});
}

MWElement GradedExpression::coefficient(const GradedWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? MWElement() : it->second;
}

void GradedExpression::insert(const GradedWord& w, const MWElement& c) {
  MWElement nc = normalize(c);
  for (const auto& [mw, coef] : nc.terms()) {
    (void)coef;
    if (!mw.letters.empty() && !(mw == MWWord::rho_eta(1, 1)))
      throw DomainError("graded coefficient must have degree zero");
  }
  if (nc.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, nc);
    return;
  }
  it->second += nc;
  if (it->second.is_zero()) terms_.erase(it);
}

GradedExpression GradedExpression::operator-() const {
  return scaled(MWElement(-1));
}

GradedExpression GradedExpression::operator+(const GradedExpression& o) const {
  GradedExpression r = *this;
  for (const auto& [w, c] : o.terms_) r.insert(w, c);
  return r;
}

GradedExpression GradedExpression::operator-(const GradedExpression& o) const {
  return *this + (-o);
}

GradedExpression GradedExpression::operator*(const GradedExpression& o) const {
  GradedExpression r;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) {
      GradedWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.insert(w, ca * cb);
    }
  return r;
}

GradedExpression& GradedExpression::operator+=(const GradedExpression& o) {
  for (const auto& [w, c] : o.terms_) insert(w, c);
  return *this;
}

GradedExpression GradedExpression::scaled(const MWElement& c) const {
  GradedExpression r;
  for (const auto& [w, cc] : terms_) r.insert(w, cc * c);
  return r;
}

std::string GradedExpression::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool is_int = c.terms().size() == 1 && c.terms().begin()->first.letters.empty();
    bool negative = false;
    std::string body;
    if (is_int) {
      BigInt v = c.terms().begin()->second;
      negative = v < 0;
      BigInt mag = negative ? BigInt(-v) : v;
      if (w.empty())
        body = mag.str();
      else if (mag == 1)
        body = join_word(w);
      else
        body = mag.str() + "*" + join_word(w);
    } else {
      body = "(" + c.str() + ")";
      if (!w.empty()) body += "*" + join_word(w);
    }
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  return out;
}

Bidegree degree_of(const GradedExpression& e, const SymbolTable& table) {
  if (e.is_zero()) throw DomainError("the zero expression has no bidegree");
  bool have = false;
  Bidegree d;
  for (const auto& [w, c] : e.terms()) {
    (void)c;
    Bidegree dw = table.degree_of(w);
    // A mixed degree-zero coefficient contributes nothing to the bidegree.
    if (!have) {
      d = dw;
      have = true;
    } else if (!(d == dw)) {
      throw DomainError("expression mixes bidegrees " + d.str() + " and " +
                        dw.str());
    }
  }
  return d;
}

GradedExpression commute(const GradedExpression& e, const SymbolTable& table,
                         std::size_t index) {
  GradedExpression out;
  for (const auto& [w, c] : e.terms()) {
    if (w.size() < index + 2)
      throw DomainError("word too short to commute at position " +
                        std::to_string(index));
    MWElement t = tau(table.get(w[index]).degree, table.get(w[index + 1]).degree);
    GradedWord swapped = w;
    std::swap(swapped[index], swapped[index + 1]);
    out += GradedExpression::word(swapped).scaled(c * t);
  }
  return out;
}

GradedExpression smash_class(const std::string& symbol,
                             const SymbolTable& table, const Bidegree& sphere,
                             bool sphere_on_right) {
  GradedExpression base = GradedExpression::letter(symbol);
  if (!sphere_on_right) return base;
  return base.scaled(tau(table.get(symbol).degree, sphere));
}

GradedExpression substitute_symbol(const GradedExpression& e,
                                   const std::string& symbol,
                                   const GradedExpression& replacement) {
  GradedExpression out;
  for (const auto& [w, c] : e.terms()) {
    std::vector<std::pair<GradedWord, MWElement>> partial = {{{}, c}};
    for (const auto& name : w) {
      if (name != symbol) {
        for (auto& p : partial) p.first.push_back(name);
        continue;
      }
      std::vector<std::pair<GradedWord, MWElement>> next;
      for (const auto& [rw, rc] : replacement.terms())
        for (const auto& p : partial) {
          GradedWord wn = p.first;
          wn.insert(wn.end(), rw.begin(), rw.end());
          next.push_back({wn, p.second * rc});
        }
      partial = std::move(next);
    }
    for (const auto& p : partial)
      out += GradedExpression::word(p.first).scaled(p.second);
  }
  return out;
}

GradedExpression expand_eps(const GradedExpression& e) {
  GradedExpression out;
  for (const auto& [w, c] : e.terms()) {
    BigInt constant = 0, mixed = 0;
    for (const auto& [mw, coef] : c.terms()) {
      if (mw.letters.empty())
        constant = coef;
      else
        mixed = coef;
    }
    if (constant != 0)
      out += GradedExpression::word(w).scaled(MWElement(constant));
    if (mixed != 0) {
      GradedWord wn = {"rho", "eta"};
      wn.insert(wn.end(), w.begin(), w.end());
      out += GradedExpression::word(wn).scaled(MWElement(mixed));
    }
  }
  return out;
}

GradedExpression normalize_graded(const GradedExpression& e,
                                  const SymbolTable& table) {
  auto run_value = [&](const std::string& name) -> const MWElement* {
    if (!table.has(name)) return nullptr;
    const GradedSymbol& s = table.get(name);
    if (s.value && s.value->in_subring()) return &*s.value;
    return nullptr;
  };
  GradedExpression out;
  for (const auto& [w, c] : e.terms()) {
    struct Segment {
      bool run;
      MWElement elem;
      std::string letter;
    };
    std::vector<Segment> segments;
    for (const auto& name : w) {
      if (const MWElement* v = run_value(name)) {
        if (!segments.empty() && segments.back().run)
          segments.back().elem *= *v;
        else
          segments.push_back({true, *v, {}});
      } else {
        segments.push_back({false, MWElement(), name});
      }
    }
    MWElement coeff = c;
    if (!segments.empty() && segments.front().run) {
      segments.front().elem = coeff * segments.front().elem;
      coeff = MWElement(1);
    }
    std::vector<std::pair<GradedWord, MWElement>> partial = {{{}, coeff}};
    for (const auto& seg : segments) {
      if (!seg.run) {
        for (auto& p : partial) p.first.push_back(seg.letter);
        continue;
      }
      MWElement nf = normalize(seg.elem);
      std::vector<std::pair<GradedWord, MWElement>> next;
      for (const auto& [mw, mcoef] : nf.terms()) {
        GradedWord letters;
        for (const auto& g : mw.letters)
          letters.push_back(g.is_eta() ? "eta" : "rho");
        for (const auto& p : partial) {
          GradedWord wn = p.first;
          wn.insert(wn.end(), letters.begin(), letters.end());
          next.push_back({wn, p.second.scaled(mcoef)});
        }
      }
      partial = std::move(next);
    }
    for (const auto& p : partial)
      out += GradedExpression::word(p.first).scaled(p.second);
  }
  return out;
}

GradedExpression apply_fact_rewrite(const GradedExpression& e,
                                    const GradedExpression& lhs,
                                    const GradedExpression& rhs) {
  if (lhs.terms().size() != 1)
    throw DomainError("rewrite pattern must be a single word");
  const auto& [pattern, pcoef] = *lhs.terms().begin();
  if (pattern.empty() || !(pcoef == MWElement(1)))
    throw DomainError("rewrite pattern must be a plain non-empty word");
  GradedExpression current = e;
  for (int guard = 0; guard < 10000; ++guard) {
    bool rewrote = false;
    for (const auto& [w, c] : current.terms()) {
      auto hit = std::search(w.begin(), w.end(), pattern.begin(), pattern.end());
      if (hit == w.end()) continue;
      GradedWord prefix(w.begin(), hit);
      GradedWord suffix(hit + pattern.size(), w.end());
      GradedExpression replaced;
      for (const auto& [rw, rc] : rhs.terms()) {
        GradedWord wn = prefix;
        wn.insert(wn.end(), rw.begin(), rw.end());
        wn.insert(wn.end(), suffix.begin(), suffix.end());
        replaced += GradedExpression::word(wn).scaled(rc);
      }
      current = current - GradedExpression::word(w).scaled(c) +
                replaced.scaled(c);
      rewrote = true;
      break;
    }
    if (!rewrote) return current;
  }
  throw InternalError("rewrite did not terminate");
}

GradedExpression meld_hopf(const MeldInput& in) {
  MWElement t1 = tau(in.X + in.Y1 - in.Z1, in.Z2);
  MWElement t2 = tau(in.X, in.Y1) * tau(in.Y1 - in.Z1, in.Z2);
  MWElement t3 = tau(in.X, in.Y2) * tau(in.X + in.Y1 - in.Z1, in.Z2);
  return (in.Hf * in.gstar).scaled(t1) + (in.fstar * in.Hg).scaled(t2) +
         (in.Hf * in.Hg * in.Delta).scaled(t3);
}

// ---------------------------------------------------------------------------
// Fact store.

void FactStore::add(const std::string& name, const GradedExpression& lhs,
                    const GradedExpression& rhs) {
  std::unique_lock lock(mutex_);
  facts_[name] = {lhs, rhs};
}

bool FactStore::has(const std::string& name) const {
  std::shared_lock lock(mutex_);
  return facts_.count(name) != 0;
}

std::pair<GradedExpression, GradedExpression> FactStore::get(
    const std::string& name) const {
  std::shared_lock lock(mutex_);
  auto it = facts_.find(name);
  if (it == facts_.end())
    throw PreconditionError("fact '" + name + "' has not been established");
  return it->second;
}

// ---------------------------------------------------------------------------
// Replay.

namespace {

// Union-find over canonically printed expressions.
class EqualityClasses {
 public:
  std::string find(const std::string& k) {
    auto it = parent_.find(k);
    if (it == parent_.end()) {
      parent_[k] = k;
      return k;
    }
    if (it->second == k) return k;
    std::string root = find(it->second);
    parent_[k] = root;
    return root;
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra != rb) parent_[ra] = rb;
  }
  bool same(const std::string& a, const std::string& b) {
    return find(a) == find(b);
  }

 private:
  std::map<std::string, std::string> parent_;
};

std::string key(const GradedExpression& e) { return e.str(); }

}  // namespace

void replay(const DerivationTrace& trace, FactStore& facts) {
  EqualityClasses classes;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Step& s = trace.steps[i];
    auto fail = [&](const std::string& msg) {
      throw InternalError("step " + std::to_string(i + 1) + " (" + s.rule +
                          ") of '" + trace.name + "': " + msg);
    };
    if (s.ref.empty()) fail("missing justification reference");
    if (s.rule == "meld") {
      const auto* p = std::get_if<MeldParams>(&s.params);
      if (!p) fail("missing meld parameters");
      if (!(meld_hopf(p->in) == s.after)) fail("recomputed meld disagrees");
      classes.unite(key(s.before), key(s.after));
    } else if (s.rule == "normalize") {
      if (!(normalize_graded(s.before, trace.symbols) == s.after))
        fail("recomputed normal form disagrees");
      classes.unite(key(s.before), key(s.after));
    } else if (s.rule == "given") {
      classes.unite(key(s.before), key(s.after));
    } else if (s.rule == "commute") {
      const auto* p = std::get_if<CommuteParams>(&s.params);
      if (!p) fail("missing commute parameters");
      if (!(commute(s.before, trace.symbols, p->index) == s.after))
        fail("recomputed commutation disagrees");
      classes.unite(key(s.before), key(s.after));
    } else if (s.rule == "smash") {
      const auto* p = std::get_if<SmashParams>(&s.params);
      if (!p) fail("missing smash parameters");
      if (!(smash_class(p->symbol, trace.symbols, p->sphere,
                        p->sphere_on_right) == s.after))
        fail("recomputed smash class disagrees");
      classes.unite(key(s.before), key(s.after));
    } else if (s.rule == "substitute") {
      const auto* p = std::get_if<SubstituteParams>(&s.params);
      if (!p) fail("missing substitution parameters");
      if (!classes.same(key(GradedExpression::letter(p->symbol)),
                        key(p->replacement)))
        fail("substituted equality has not been established");
      if (!(substitute_symbol(s.before, p->symbol, p->replacement) == s.after))
        fail("recomputed substitution disagrees");
      classes.unite(key(s.before), key(s.after));
    } else if (s.rule == "expand-eps") {
      if (!(expand_eps(s.before) == s.after))
        fail("recomputed expansion disagrees");
      classes.unite(key(s.before), key(s.after));
    } else if (s.rule == "apply-fact") {
      const auto* p = std::get_if<FactParams>(&s.params);
      if (!p) fail("missing fact name");
      auto [lhs, rhs] = facts.get(p->name);  // PreconditionError if absent
      if (!(apply_fact_rewrite(s.before, lhs, rhs) == s.after))
        fail("recomputed rewrite disagrees");
      classes.unite(key(s.before), key(s.after));
    } else if (s.rule == "cancel") {
      const auto* p = std::get_if<CancelParams>(&s.params);
      if (!p) fail("missing cancellation parameters");
      if (p->n == 1) fail("cancellation requires a factor other than 1");
      if (!s.after.is_zero()) fail("cancellation must conclude zero");
      if (!classes.same(key(s.before),
                        key(s.before.scaled(MWElement(p->n)))))
        fail("x ~ n*x has not been established");
      classes.unite(key(s.before), key(GradedExpression::zero()));
    } else if (s.rule == "scale") {
      const auto* p = std::get_if<ScaleParams>(&s.params);
      if (!p) fail("missing scale parameters");
      if (!classes.same(key(p->e), key(GradedExpression::zero())))
        fail("scaled expression is not known to vanish");
      if (!(p->e.scaled(p->c) == s.before)) fail("scale factor mismatch");
      if (!s.after.is_zero()) fail("scaling must conclude zero");
      classes.unite(key(s.before), key(GradedExpression::zero()));
    } else if (s.rule == "conclude") {
      if (!classes.same(key(s.before), key(s.after)))
        fail("claimed equality has not been established");
    } else if (s.rule == "fact") {
      const auto* p = std::get_if<FactParams>(&s.params);
      if (!p) fail("missing fact name");
      if (!classes.same(key(s.before), key(s.after)))
        fail("claimed equality has not been established");
      facts.add(p->name, s.before, s.after);
    } else {
      fail("unknown rule");
    }
  }
}

std::string step_params_summary(const Step& step) {
  std::ostringstream out;
  if (const auto* p = std::get_if<MeldParams>(&step.params)) {
    out << "X=" << p->in.X.str() << " Y1=" << p->in.Y1.str()
        << " Y2=" << p->in.Y2.str() << " Z1=" << p->in.Z1.str()
        << " Z2=" << p->in.Z2.str();
  } else if (const auto* p = std::get_if<CommuteParams>(&step.params)) {
    out << "index=" << p->index;
  } else if (const auto* p = std::get_if<SmashParams>(&step.params)) {
    out << "symbol=" << p->symbol << " sphere=" << p->sphere.str()
        << " side=" << (p->sphere_on_right ? "right" : "left");
  } else if (const auto* p = std::get_if<SubstituteParams>(&step.params)) {
    out << p->symbol << " := " << p->replacement.str();
  } else if (const auto* p = std::get_if<CancelParams>(&step.params)) {
    out << "n=" << p->n.str();
  } else if (const auto* p = std::get_if<ScaleParams>(&step.params)) {
    out << "c=" << p->c.str() << " e=" << p->e.str();
  } else if (const auto* p = std::get_if<FactParams>(&step.params)) {
    out << p->name;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Packaged derivations.

namespace {

const GradedExpression kOne = GradedExpression::word({});

Step meld_step(const GradedExpression& named, const MeldInput& in,
               const std::string& ref) {
  return {"meld", ref, named, meld_hopf(in), MeldParams{in}};
}

}  // namespace

DerivationTrace derive_eta_nu(FactStore& facts) {
  DerivationTrace trace;
  trace.name = "eta-nu";
  trace.symbols = SymbolTable::builtins();
  trace.symbols.add({"H(alpha)", {1, 1}, std::nullopt});
  trace.symbols.add({"H(alpha#alpha)", {1, 1}, std::nullopt});

  const GradedExpression eta = GradedExpression::letter("eta");
  const GradedExpression nu = GradedExpression::letter("nu");
  const GradedExpression rho = GradedExpression::letter("rho");
  const GradedExpression h_alpha = GradedExpression::letter("H(alpha)");
  const GradedExpression h_join = GradedExpression::letter("H(alpha#alpha)");

  // The Hopf class of the one-cell map: only the middle meld term survives
  // because the Hopf construction applied to a projection vanishes.
  MeldInput alpha{GradedExpression::zero(), kOne, eta, kOne, rho,
                  {1, 1},  {1, 1}, {1, 1}, {1, 1}, {1, 1}};
  Step s1 = meld_step(h_alpha, alpha,
                      "melding formula; Hopf construction of a projection is null");
  Step s2{"normalize", "Morel relation (iii)", s1.after,
          normalize_graded(s1.after, trace.symbols), NormalizeParams{}};

  // The Hopf class of the join square.
  MeldInput join{eta,    kOne,   eta,    kOne,   rho,
                 {1, 1}, {3, 2}, {3, 2}, {3, 2}, {3, 2}};
  Step s3 = meld_step(h_join, join, "melding formula");
  Step s4{"normalize", "Morel relation (iii)", s3.after,
          normalize_graded(s3.after, trace.symbols), NormalizeParams{}};

  Step s5{"given", "James-Hopf composition identity", h_alpha * nu,
          nu * h_join, std::monostate{}};
  Step s6{"substitute", "functoriality of composition", h_alpha * nu,
          eta * nu, SubstituteParams{"H(alpha)", eta}};
  Step s7{"substitute", "functoriality of composition", nu * h_join,
          GradedExpression::zero(),
          SubstituteParams{"H(alpha#alpha)", GradedExpression::zero()}};
  Step s8{"conclude", "transitivity of equality", eta * nu,
          GradedExpression::zero(), std::monostate{}};
  Step s9{"fact", "derived relation", eta * nu, GradedExpression::zero(),
          FactParams{"eta*nu=0"}};

  trace.steps = {s1, s2, s3, s4, s5, s6, s7, s8, s9};
  replay(trace, facts);
  return trace;
}

DerivationTrace derive_nu_sigma(FactStore& facts) {
  DerivationTrace trace;
  trace.name = "nu-sigma";
  trace.symbols = SymbolTable::builtins();
  trace.symbols.add({"Hbeta", {3, 2}, std::nullopt});
  trace.symbols.add({"H(beta#beta)", {3, 2}, std::nullopt});

  const GradedExpression nu = GradedExpression::letter("nu");
  const GradedExpression sigma = GradedExpression::letter("sigma");
  const GradedExpression h_beta = GradedExpression::letter("Hbeta");
  const GradedExpression h_join = GradedExpression::letter("H(beta#beta)");

  MeldInput beta{GradedExpression::zero(), kOne,   nu,     kOne,
                 GradedExpression::zero(), {3, 2}, {3, 2}, {3, 2},
                 {3, 2},                   {3, 2}};
  Step s1 = meld_step(h_beta, beta,
                      "melding formula; Hopf construction of a projection is null");

  MeldInput join{h_beta, kOne,   h_beta, kOne,   GradedExpression::zero(),
                 {3, 2}, {7, 4}, {7, 4}, {7, 4}, {7, 4}};
  Step s2 = meld_step(h_join, join, "melding formula");

  Step s3{"given", "James-Hopf composition identity", h_beta * sigma,
          sigma * h_join, std::monostate{}};
  Step s4{"substitute", "functoriality of composition", sigma * h_join,
          (sigma * h_beta).scaled(-2), SubstituteParams{"H(beta#beta)", s2.after}};
  Step s5{"commute", "graded commutativity", s4.after,
          commute(s4.after, trace.symbols, 0), CommuteParams{0}};
  Step s6{"cancel", "additive cancellation", h_beta * sigma,
          GradedExpression::zero(), CancelParams{BigInt(2)}};
  Step s7{"substitute", "functoriality of composition", h_beta * sigma,
          -(nu * sigma), SubstituteParams{"Hbeta", s1.after}};
  Step s8{"scale", "linearity", nu * sigma, GradedExpression::zero(),
          ScaleParams{MWElement(-1), -(nu * sigma)}};
  Step s9{"conclude", "transitivity of equality", nu * sigma,
          GradedExpression::zero(), std::monostate{}};
  Step s10{"fact", "derived relation", nu * sigma, GradedExpression::zero(),
           FactParams{"nu*sigma=0"}};

  trace.steps = {s1, s2, s3, s4, s5, s6, s7, s8, s9, s10};
  replay(trace, facts);
  return trace;
}

DerivationTrace derive_epsilon_nu(FactStore& facts) {
  DerivationTrace trace;
  trace.name = "epsilon-nu";
  trace.symbols = SymbolTable::builtins();

  const GradedExpression nu = GradedExpression::letter("nu");
  const GradedExpression eps_nu = nu.scaled(MWElement::eps());

  Step s1{"expand-eps", "the degree-zero subring is central", eps_nu,
          expand_eps(eps_nu), std::monostate{}};
  Step s2{"apply-fact", "composition with a null class is null", s1.after,
          -nu, FactParams{"eta*nu=0"}};
  Step s3{"conclude", "transitivity of equality", eps_nu, -nu,
          std::monostate{}};
  Step s4{"fact", "derived relation", eps_nu, -nu, FactParams{"eps*nu=-nu"}};

  trace.steps = {s1, s2, s3, s4};
  replay(trace, facts);
  return trace;
}

MWElement ring_spectrum_square(long long n) {
  if (n < 0) throw DomainError("smash power exponent must be non-negative");
  unsigned twist = odd(n * n) ? 1u : 0u;
  MWElement e = MWElement::eps().pow(twist) *
                MWElement::rho().pow(static_cast<unsigned>(n));
  return normalize(e);
}

// ---------------------------------------------------------------------------
// Finite pointed-set model.

namespace {

// Solve a square rational linear system by Gaussian elimination.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw DomainError("singular linear system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    Rational inv = a[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[col][j] = a[col][j] * inv;
    b[col] = b[col] * inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Rational f = a[row][col];
      for (std::size_t j = col; j < n; ++j)
        a[row][j] = a[row][j] - f * a[col][j];
      b[row] = b[row] - f * b[col];
    }
  }
  return b;
}

bool satisfies_column(const std::vector<std::vector<Rational>>& a,
                      const std::vector<Rational>& rhs,
                      const std::vector<long long>& candidate) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    Rational acc(0);
    for (std::size_t cidx = 0; cidx < candidate.size(); ++cidx)
      acc = acc + a[r][cidx] * Rational(candidate[cidx]);
    if (!(acc == rhs[r])) return false;
  }
  return true;
}

}  // namespace

FiniteChiReport finite_chi(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0)
    throw DomainError("both factors need at least one non-base point");
  FiniteChiReport report;
  report.m = m;
  report.n = n;

  // Unknowns and rows share one ordering: (x_i,*), then (*,y_j), then
  // (x_i,y_j) in lexicographic order.
  const std::size_t unknowns = m + n + m * n;
  auto product_index = [&](std::size_t i, std::size_t j) {
    return m + n + i * n + j;
  };
  for (std::size_t i = 0; i < m; ++i)
    report.row_labels.push_back("(x" + std::to_string(i + 1) + ",*)");
  for (std::size_t j = 0; j < n; ++j)
    report.row_labels.push_back("(*,y" + std::to_string(j + 1) + ")");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      report.row_labels.push_back("(x" + std::to_string(i + 1) + ",y" +
                                  std::to_string(j + 1) + ")");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      report.col_labels.push_back("x" + std::to_string(i + 1) + "^y" +
                                  std::to_string(j + 1));

  // Coefficient matrix: composing with the smash quotient must give the
  // identity, composing with either projection must give zero.
  std::vector<std::vector<Rational>> a(unknowns,
                                       std::vector<Rational>(unknowns, Rational(0)));
  std::size_t eq = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[eq++][product_index(i, j)] = Rational(1);
  for (std::size_t i = 0; i < m; ++i) {
    a[eq][i] = Rational(1);
    for (std::size_t j = 0; j < n; ++j)
      a[eq][product_index(i, j)] = Rational(1);
    ++eq;
  }
  for (std::size_t j = 0; j < n; ++j) {
    a[eq][m + j] = Rational(1);
    for (std::size_t i = 0; i < m; ++i)
      a[eq][product_index(i, j)] = Rational(1);
    ++eq;
  }

  report.chi.assign(unknowns, std::vector<Rational>(m * n, Rational(0)));
  report.unique_in_box = true;
  for (std::size_t col = 0; col < m * n; ++col) {
    std::vector<Rational> rhs(unknowns, Rational(0));
    rhs[col] = Rational(1);
    std::vector<Rational> sol = solve_linear(a, rhs);
    for (std::size_t r = 0; r < unknowns; ++r) {
      if (!sol[r].is_integer())
        throw InternalError("non-integral entry in the defect matrix");
      report.chi[r][col] = sol[r];
    }
    // Independent check on small systems: the solution is the only integer
    // vector with entries in [-2, 2].
    if (unknowns <= 6) {
      std::vector<long long> candidate(unknowns, -2);
      std::size_t matches = 0;
      bool matched_solution = false;
      while (true) {
        if (satisfies_column(a, rhs, candidate)) {
          ++matches;
          bool equal = true;
          for (std::size_t r = 0; r < unknowns; ++r)
            if (!(Rational(candidate[r]) == sol[r])) equal = false;
          if (equal) matched_solution = true;
        }
        std::size_t pos = 0;
        while (pos < unknowns && candidate[pos] == 2) candidate[pos++] = -2;
        if (pos == unknowns) break;
        ++candidate[pos];
      }
      if (matches != 1 || !matched_solution) report.unique_in_box = false;
    }
  }
  return report;
}

HopfMuReport hopf_mu_s0() {
  FiniteChiReport chi = finite_chi(1, 1);
  // Rows are ordered (x1,*), (*,y1), (x1,y1); the fold map sends both
  // one-sided points to the non-base point and the doubled point to base.
  const std::vector<long long> mu = {1, 1, 0};
  const std::vector<long long> smash_quotient = {0, 0, 1};
  const std::vector<long long> first_projection = {1, 0, 1};
  auto dot = [&](const std::vector<long long>& row) {
    Rational acc(0);
    for (std::size_t r = 0; r < row.size(); ++r)
      acc = acc + Rational(row[r]) * chi.chi[r][0];
    return acc.num();
  };
  return {dot(mu), dot(smash_quotient), dot(first_projection)};
}

}  // namespace stemcalc
