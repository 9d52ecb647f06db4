#include "stemcalc/mw_ring.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace stemcalc {

MWWord MWWord::rho_eta(unsigned i, unsigned j) {
  MWWord w;
  for (unsigned k = 0; k < i; ++k)
    w.letters.push_back(MWGenerator::rho_default());
  for (unsigned k = 0; k < j; ++k) w.letters.push_back(MWGenerator::eta());
  return w;
}

MWWord MWWord::operator*(const MWWord& o) const {
  MWWord w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

bool MWWord::operator<(const MWWord& o) const {
  return std::lexicographical_compare(letters.begin(), letters.end(),
                                      o.letters.begin(), o.letters.end());
}

namespace {

std::string letter_str(const MWGenerator& g) {
  if (g.is_eta()) return "eta";
  if (g.is_default_rho()) return "rho";
  return "rho[" + g.subscript.str() + "]";
}

}  // namespace

std::string MWWord::str() const {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t run = i + 1;
    while (run < letters.size() && letters[run] == letters[i]) ++run;
    if (!out.empty()) out += "*";
    out += letter_str(letters[i]);
    if (run - i > 1) out += "^" + std::to_string(run - i);
    i = run;
  }
  return out;
}

MWElement::MWElement(const BigInt& c) {
  if (c != 0) terms_[MWWord::one()] = c;
}

MWElement MWElement::generator(const MWGenerator& g) {
  MWElement e;
  MWWord w;
  w.letters.push_back(g);
  e.terms_[w] = 1;
  return e;
}

MWElement MWElement::word(const MWWord& w) {
  MWElement e;
  e.terms_[w] = 1;
  return e;
}

MWElement MWElement::eps() {
  return MWElement(-1) - word(MWWord::rho_eta(1, 1));
}

BigInt MWElement::coefficient(const MWWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

MWElement MWElement::operator-() const {
  MWElement e;
  for (const auto& [w, c] : terms_) e.terms_[w] = -c;
  return e;
}

MWElement MWElement::operator+(const MWElement& o) const {
  MWElement e = *this;
  for (const auto& [w, c] : o.terms_) {
    auto [it, fresh] = e.terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) e.terms_.erase(it);
    }
  }
  return e;
}

MWElement MWElement::operator-(const MWElement& o) const {
  return *this + (-o);
}

MWElement MWElement::operator*(const MWElement& o) const {
  MWElement e;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) {
      MWWord w = wa * wb;
      auto [it, fresh] = e.terms_.try_emplace(w, BigInt(ca * cb));
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) e.terms_.erase(it);
      }
    }
  return e;
}

MWElement MWElement::pow(unsigned e) const {
  MWElement r(1), b = *this;
  for (; e; e >>= 1, b *= b)
    if (e & 1) r *= b;
  return r;
}

MWElement MWElement::scaled(const BigInt& c) const {
  MWElement e;
  if (c == 0) return e;
  for (const auto& [w, k] : terms_) e.terms_[w] = k * c;
  return e;
}

bool MWElement::in_subring() const {
  for (const auto& [w, c] : terms_)
    for (const auto& g : w.letters)
      if (!g.is_eta() && !g.is_default_rho()) return false;
  return true;
}

std::string MWElement::str() const {
  if (terms_.empty()) return "0";

  const MWWord fold_word = MWWord::rho_eta(1, 1);
  BigInt c1 = coefficient(fold_word);

  // Display order: constant, eps, rho powers, eta powers, mixed canonical
  // words, then everything else in word order.
  struct Item {
    std::tuple<int, unsigned, unsigned, MWWord> key;
    BigInt coeff;
    std::string body;  // empty for the constant
  };
  auto classify = [](const MWWord& w) {
    unsigned i = 0, j = 0;
    std::size_t pos = 0;
    while (pos < w.letters.size() && w.letters[pos].is_default_rho()) {
      ++i;
      ++pos;
    }
    while (pos < w.letters.size() && w.letters[pos].is_eta()) {
      ++j;
      ++pos;
    }
    if (pos != w.letters.size())
      return std::tuple<int, unsigned, unsigned, MWWord>{5, 0, 0, w};
    if (i == 0 && j == 0) return std::tuple<int, unsigned, unsigned, MWWord>{0, 0, 0, w};
    if (j == 0) return std::tuple<int, unsigned, unsigned, MWWord>{2, i, 0, w};
    if (i == 0) return std::tuple<int, unsigned, unsigned, MWWord>{3, j, 0, w};
    return std::tuple<int, unsigned, unsigned, MWWord>{4, i, j, w};
  };

  std::vector<Item> items;
  for (const auto& [w, c] : terms_) {
    if (c1 != 0 && w == fold_word) continue;
    if (c1 != 0 && w.letters.empty()) {
      BigInt shown = c - c1;
      if (shown != 0) items.push_back({classify(w), shown, ""});
      continue;
    }
    items.push_back({classify(w), c, w.letters.empty() ? "" : w.str()});
  }
  if (c1 != 0) {
    if (coefficient(MWWord::one()) == 0) {
      // No constant term to merge with: the folded constant is -(-c1)... it
      // still needs displaying because eps carries a hidden -1.
      BigInt shown = -c1;
      if (shown != 0)
        items.push_back(
            {std::tuple<int, unsigned, unsigned, MWWord>{0, 0, 0,
                                                         MWWord::one()},
             shown, ""});
    }
    items.push_back({std::tuple<int, unsigned, unsigned, MWWord>{
                         1, 0, 0, MWWord::one()},
                     -c1, "eps"});
  }

  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.key < b.key; });

  std::string out;
  for (const auto& item : items) {
    BigInt abs = item.coeff < 0 ? BigInt(-item.coeff) : item.coeff;
    std::string piece;
    if (item.body.empty())
      piece = abs.str();
    else if (abs == 1)
      piece = item.body;
    else
      piece = abs.str() + "*" + item.body;
    if (out.empty())
      out = (item.coeff < 0 ? "-" : "") + piece;
    else
      out += (item.coeff < 0 ? " - " : " + ") + piece;
  }
  return out;
}

namespace {

class MWParser {
public:
  explicit MWParser(const std::string& text) : text_(text) {}

  MWElement run() {
    MWElement e = expr();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  MWElement expr() {
    MWElement e = term();
    while (true) {
      skip_space();
      if (accept('+'))
        e += term();
      else if (accept('-'))
        e -= term();
      else
        return e;
    }
  }

  MWElement term() {
    MWElement e = factor();
    while (true) {
      skip_space();
      if (accept('*'))
        e *= factor();
      else
        return e;
    }
  }

  MWElement factor() {
    skip_space();
    if (accept('-')) return -factor();
    return power();
  }

  MWElement power() {
    MWElement base = atom();
    skip_space();
    if (accept('^')) {
      skip_space();
      std::size_t at = pos_;
      if (pos_ == text_.size() || !std::isdigit(byte(pos_)))
        throw ParseError("expected a nonnegative integer exponent", at);
      unsigned long long e = 0;
      while (pos_ < text_.size() && std::isdigit(byte(pos_))) {
        e = e * 10 + static_cast<unsigned long long>(byte(pos_) - '0');
        if (e > 100000) throw ParseError("exponent too large", at);
        ++pos_;
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MWElement atom() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = byte(pos_);
    if (c == '(') {
      ++pos_;
      MWElement e = expr();
      skip_space();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(c)) {
      BigInt n = digits();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/')
        throw ParseError("coefficients are integers here", pos_);
      return MWElement(n);
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t at = pos_;
      std::string name = ident();
      if (name == "eta") return MWElement::eta();
      if (name == "eps") return MWElement::eps();
      if (name == "rho") {
        skip_space();
        if (accept('[')) {
          Rational a = subscript();
          skip_space();
          if (!accept(']')) throw ParseError("expected ']'", pos_);
          if (a.is_zero())
            throw ParseError("rho subscript must be nonzero", at);
          return MWElement::rho_sub(a);
        }
        return MWElement::rho();
      }
      throw ParseError("unknown symbol '" + name + "'", at);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Rational subscript() {
    skip_space();
    bool neg = accept('-');
    skip_space();
    if (pos_ == text_.size() || !std::isdigit(byte(pos_)))
      throw ParseError("expected a rational subscript", pos_);
    BigInt n = digits();
    skip_space();
    if (accept('/')) {
      skip_space();
      if (pos_ == text_.size() || !std::isdigit(byte(pos_)))
        throw ParseError("expected digits after '/'", pos_);
      BigInt d = digits();
      if (d == 0) throw ParseError("zero denominator", pos_);
      return Rational(neg ? -n : n, d);
    }
    return Rational(neg ? -n : n);
  }

  BigInt digits() {
    BigInt v = 0;
    while (pos_ < text_.size() && std::isdigit(byte(pos_))) {
      v = v * 10 + (byte(pos_) - '0');
      ++pos_;
    }
    return v;
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(byte(pos_)) || byte(pos_) == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(byte(pos_))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned char byte(std::size_t i) const {
    return static_cast<unsigned char>(text_[i]);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

MWElement parse_expr(const std::string& text) { return MWParser(text).run(); }

namespace mw_detail {

MWElement normalize_preferring(const MWElement& e, bool rho_square_first) {
  MWElement out;
  for (const auto& [w, c0] : e.terms()) {
    unsigned i = 0, j = 0;
    for (const auto& g : w.letters) {
      if (g.is_eta())
        ++j;
      else if (g.is_default_rho())
        ++i;
      else
        throw SubringError("normalize: generator " + letter_str(g) +
                           " is outside the decidable subring");
    }
    BigInt c = c0;
    while (true) {
      bool eta_square = i >= 1 && j >= 2;  // rho eta^2 -> -2 eta
      bool rho_square = i >= 2 && j >= 1;  // rho^2 eta -> -2 rho
      bool apply_rho_square =
          rho_square_first ? rho_square : (rho_square && !eta_square);
      if (apply_rho_square || eta_square) {
        --i;
        --j;
        c *= -2;
      } else {
        break;
      }
    }
    out += MWElement::word(MWWord::rho_eta(i, j)).scaled(c);
  }
  return out;
}

MWElement expand_product_subscript(const Rational& a, const Rational& b) {
  MWElement ra = MWElement::rho_sub(a), rb = MWElement::rho_sub(b);
  return ra + rb + ra * rb * MWElement::eta();
}

}  // namespace mw_detail

MWElement normalize(const MWElement& e) {
  return mw_detail::normalize_preferring(e, false);
}

bool equals(const MWElement& a, const MWElement& b) {
  return normalize(a) == normalize(b);
}

namespace {

/// Smallest prime factor of n >= 2.
BigInt smallest_prime_factor(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (BigInt d = 3; d * d <= n; d += 2)
    if (n % d == 0) return d;
  return n;
}

/// Integer subscripts other than -1, 1, and the positive primes expand.
bool expandable_subscript(const Rational& a) {
  if (!a.is_integer()) return false;
  const BigInt& n = a.num();
  if (n == 1 || n == -1) return false;
  if (n < 0) return true;
  return smallest_prime_factor(n) != n;
}

}  // namespace

MWElement simplify_general(const MWElement& e, int max_steps) {
  MWElement cur = e;
  for (int step = 0; step < max_steps; ++step) {
    // Rule 1: words containing rho[1] are zero.
    {
      MWElement next;
      bool hit = false;
      for (const auto& [w, c] : cur.terms()) {
        bool has_one = false;
        for (const auto& g : w.letters)
          if (g.is_rho() && g.subscript == Rational(1)) has_one = true;
        if (has_one)
          hit = true;
        else
          next += MWElement::word(w).scaled(c);
      }
      if (hit) {
        cur = next;
        continue;
      }
    }

    // Rule 2: an adjacent pair rho[a] rho[1-a] kills its word.
    {
      MWElement next;
      bool hit = false;
      for (const auto& [w, c] : cur.terms()) {
        bool has_pair = false;
        for (std::size_t k = 0; k + 1 < w.letters.size(); ++k) {
          const auto& g = w.letters[k];
          const auto& h = w.letters[k + 1];
          if (g.is_rho() && h.is_rho() &&
              h.subscript == Rational(1) - g.subscript)
            has_pair = true;
        }
        if (has_pair)
          hit = true;
        else
          next += MWElement::word(w).scaled(c);
      }
      if (hit) {
        cur = next;
        continue;
      }
    }

    // Rule 3: move every eta to the right end of its word.
    {
      MWElement next;
      bool hit = false;
      for (const auto& [w, c] : cur.terms()) {
        MWWord sorted;
        unsigned etas = 0;
        for (const auto& g : w.letters) {
          if (g.is_eta())
            ++etas;
          else
            sorted.letters.push_back(g);
        }
        for (unsigned k = 0; k < etas; ++k)
          sorted.letters.push_back(MWGenerator::eta());
        if (!(sorted == w)) hit = true;
        next += MWElement::word(sorted).scaled(c);
      }
      if (hit) {
        cur = next;
        continue;
      }
    }

    // Rule 4: expand the leftmost expandable subscript of the first term
    // that has one, splitting off the sign or the smallest prime factor.
    {
      bool hit = false;
      MWElement next;
      for (const auto& [w, c] : cur.terms()) {
        if (hit) {
          next += MWElement::word(w).scaled(c);
          continue;
        }
        std::size_t at = w.letters.size();
        for (std::size_t k = 0; k < w.letters.size(); ++k) {
          if (w.letters[k].is_rho() &&
              expandable_subscript(w.letters[k].subscript)) {
            at = k;
            break;
          }
        }
        if (at == w.letters.size()) {
          next += MWElement::word(w).scaled(c);
          continue;
        }
        hit = true;
        const BigInt& n = w.letters[at].subscript.num();
        Rational a = n < 0 ? Rational(-1) : Rational(smallest_prime_factor(n));
        Rational b = w.letters[at].subscript / a;
        MWWord prefix, suffix;
        prefix.letters.assign(w.letters.begin(),
                              w.letters.begin() + static_cast<std::ptrdiff_t>(at));
        suffix.letters.assign(
            w.letters.begin() + static_cast<std::ptrdiff_t>(at) + 1,
            w.letters.end());
        MWElement mid = mw_detail::expand_product_subscript(a, b);
        next += (MWElement::word(prefix) * mid * MWElement::word(suffix))
                    .scaled(c);
      }
      if (hit) {
        cur = next;
        continue;
      }
    }

    return cur;  // fixpoint
  }
  return cur;  // step bound hit: current reduct
}

MWElement power_map_class(long long n) {
  MWElement eps = MWElement::eps();
  MWElement p(0);
  if (n >= 0) {
    for (long long k = 0; k < n; ++k) p = MWElement(1) - eps * p;
  } else {
    for (long long k = 0; k > n; --k) p = eps - eps * p;
  }
  MWElement by_recursion = normalize(p);

  MWElement one_minus_eps = MWElement(1) - eps;
  MWElement closed =
      (n % 2 == 0)
          ? one_minus_eps.scaled(BigInt(n / 2))
          : MWElement(1) + one_minus_eps.scaled(BigInt((n - 1) / 2));
  if (by_recursion != normalize(closed))
    throw InternalError("power class recursion disagrees with closed form");
  return by_recursion;
}

MWElement diagonal_class(long long p, long long q) {
  if (q < 0) throw DomainError("diagonal class needs q >= 0");
  if (p < q) throw DomainError("diagonal class needs p >= q");
  if (p > q) return MWElement(0);
  if (q > 100000)
    throw ResourceLimitError("diagonal exponent too large for explicit words");
  // The twist exponent is q(q-1)/2; only its parity survives eps^2 = 1,
  // and that parity is 1 exactly when q = 2 or 3 mod 4.
  unsigned twist = (q % 4 == 2 || q % 4 == 3) ? 1u : 0u;
  MWElement e =
      MWElement::eps().pow(twist) * MWElement::rho().pow(static_cast<unsigned>(q));
  return normalize(e);
}

}  // namespace stemcalc
