#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stemcalc/poly_parse.hpp"
#include "stemcalc/polynomial.hpp"

using namespace stemcalc;

namespace {

MultiPoly random_poly(std::mt19937& rng) {
  static const char* vars[] = {"x", "y", "z", "w"};
  std::uniform_int_distribution<int> term_count(0, 5);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> degree(0, 4);
  std::uniform_int_distribution<int> var_pick(0, 3);

  MultiPoly p;
  int n = term_count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    int d = degree(rng);
    for (int k = 0; k < d; ++k) m = m * Monomial::var(vars[var_pick(rng)]);
    p += MultiPoly::term(Rational(coeff(rng)), m);
  }
  return p;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -2) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5).str() == "-5");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("monomial operations") {
  Monomial x2y = Monomial::var("x", 2) * Monomial::var("y");
  Monomial xy = Monomial::var("x") * Monomial::var("y");
  CHECK(x2y.total_degree() == 3);
  CHECK(xy.divides(x2y));
  CHECK_FALSE(x2y.divides(xy));
  CHECK(x2y.divide_by(xy) == Monomial::var("x"));
  CHECK(Monomial::lcm(Monomial::var("x", 2), xy) == x2y);
  CHECK(Monomial().is_constant());
  CHECK(Monomial().str() == "1");
  CHECK_THROWS_AS(xy.divide_by(Monomial::var("z")), DomainError);
}

TEST_CASE("basic polynomial identities") {
  MultiPoly x = MultiPoly::var("x");
  MultiPoly y = MultiPoly::var("y");
  CHECK((x + MultiPoly(1)) + MultiPoly(-1) == x);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(x - x == MultiPoly());
  CHECK((x - x).is_zero());
  CHECK(x.pow(0) == MultiPoly(1));
  CHECK((x + 1).pow(2) == x * x + x.scaled(Rational(2)) + 1);
}

TEST_CASE("substitution collapses cone coordinates") {
  MultiPoly p = parse_poly("(1-t)*x + t");
  CHECK(p.substitute({{"t", MultiPoly(1)}}) == MultiPoly(1));
  CHECK(p.substitute({{"t", MultiPoly(0)}}) == MultiPoly::var("x"));

  MultiPoly h = parse_poly("(1 - t + u*t)*x + t");
  CHECK(h.substitute({{"u", MultiPoly(1)}}) == parse_poly("x + t"));
  CHECK(h.substitute({{"u", MultiPoly(0)}}) == p);
}

TEST_CASE("ring axioms hold on random triples") {
  std::mt19937 rng(20260822);
  for (int round = 0; round < 200; ++round) {
    MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + MultiPoly() == a);
    CHECK(a * MultiPoly(1) == a);
    CHECK(a * MultiPoly() == MultiPoly());
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(7);
  std::map<std::string, MultiPoly> bindings = {
      {"x", parse_poly("y + 1")},
      {"y", parse_poly("z^2 - w")},
  };
  for (int round = 0; round < 100; ++round) {
    MultiPoly a = random_poly(rng), b = random_poly(rng);
    CHECK((a + b).substitute(bindings) ==
          a.substitute(bindings) + b.substitute(bindings));
    CHECK((a * b).substitute(bindings) ==
          a.substitute(bindings) * b.substitute(bindings));
  }
  CHECK(MultiPoly(1).substitute(bindings) == MultiPoly(1));
}

TEST_CASE("evaluation and renaming") {
  MultiPoly p = parse_poly("x^2 + y");
  CHECK(p.evaluate({{"x", Rational(2)}, {"y", Rational(3)}}) == Rational(7));
  CHECK(p.evaluate({{"x", Rational(-1, 2)}, {"y", Rational(0)}}) ==
        Rational(1, 4));
  CHECK_THROWS_AS(p.evaluate({{"x", Rational(1)}}), DomainError);

  CHECK(p.rename("y", "t") == parse_poly("x^2 + t"));
  CHECK_THROWS_AS(p.rename("y", "x"), DomainError);
}

TEST_CASE("parser accepts the documented grammar") {
  CHECK(parse_poly("x + -x").is_zero());
  CHECK(parse_poly("-(x - y)") == parse_poly("y - x"));
  CHECK(parse_poly("3/2*x") == MultiPoly::var("x").scaled(Rational(3, 2)));
  CHECK(parse_poly("2^3") == MultiPoly(8));
  CHECK(parse_poly("(x + y)^2") == parse_poly("x^2 + 2*x*y + y^2"));
  CHECK(parse_poly(" 1 - 2 * x ") == parse_poly("1-2*x"));
  CHECK(parse_poly("x_1 + x_2") == MultiPoly::var("x_1") + MultiPoly::var("x_2"));
}

TEST_CASE("parser rejects malformed input with a position") {
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("2x"), ParseError);
  CHECK_THROWS_AS(parse_poly("x y"), ParseError);
  CHECK_THROWS_AS(parse_poly("(x"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^-1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x +"), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
  try {
    parse_poly("2x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
}

TEST_CASE("printing round-trips through the parser") {
  CHECK(MultiPoly().str() == "0");
  CHECK(parse_poly("x^2 - y^2").str() == "x^2 - y^2");
  CHECK(parse_poly("-x - 1").str() == "-x - 1");
  CHECK(parse_poly("3/2*x*y - 1/2").str() == "3/2*x*y - 1/2");

  std::mt19937 rng(99);
  for (int round = 0; round < 100; ++round) {
    MultiPoly p = random_poly(rng);
    CHECK(parse_poly(p.str()) == p);
  }
}
