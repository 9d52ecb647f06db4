#include "stemcalc/poly_parse.hpp"

#include <cctype>

namespace stemcalc {
namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return p;
  }

private:
  MultiPoly expr() {
    MultiPoly p = term();
    while (true) {
      skip_space();
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (true) {
      skip_space();
      if (accept('*'))
        p *= factor();
      else
        return p;
    }
  }

  MultiPoly factor() {
    skip_space();
    if (accept('-')) return -factor();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
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

  MultiPoly atom() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = byte(pos_);
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      skip_space();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(c)) return MultiPoly(number());
    if (std::isalpha(c) || c == '_') return MultiPoly::var(ident());
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Rational number() {
    BigInt n = digits();
    skip_space();
    if (accept('/')) {
      skip_space();
      if (pos_ == text_.size() || !std::isdigit(byte(pos_)))
        throw ParseError("expected digits after '/'", pos_);
      BigInt d = digits();
      if (d == 0) throw ParseError("zero denominator", pos_);
      return Rational(n, d);
    }
    return Rational(n);
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

MultiPoly parse_poly(const std::string& text) { return Parser(text).run(); }

}  // namespace stemcalc
