#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stemcalc/homotopy_cert.hpp"
#include "stemcalc/poly_parse.hpp"

using namespace stemcalc;

#ifndef STEMCALC_DATA_DIR
#define STEMCALC_DATA_DIR "data"
#endif

namespace {

PieceMap piece(const std::string& main, const std::string& cone,
               std::optional<std::string> h, const std::string& c1,
               const std::string& c2) {
  return {main, cone, std::move(h), {parse_poly(c1), parse_poly(c2)}};
}

}  // namespace

TEST_CASE("the built-in chain verifies completely") {
  HomotopyChain chain = builtin_delta_R_chain();
  REQUIRE(chain.maps.size() == 5);
  REQUIRE(chain.homotopies.size() == 4);
  CHECK(chain.maps.front().name == "delta");
  CHECK(chain.maps.back().name == "R");

  VerifyReport report = verify_chain(chain);
  CHECK(report.items.size() == 54);
  for (const auto& item : report.items) {
    INFO(item.name);
    CHECK(item.ok);
  }
  CHECK(report.all_ok());
}

TEST_CASE("first and last maps fix the chosen basepoint") {
  HomotopyChain chain = builtin_delta_R_chain();
  auto delta = evaluate_piece(chain.maps[0].piece_x, Rational(1), Rational(1));
  CHECK(delta.first == Rational(1));
  CHECK(delta.second == Rational(1));
  auto r = evaluate_piece(chain.maps[4].piece_x, Rational(1), Rational(1));
  CHECK(r.first == Rational(1));
  CHECK(r.second == Rational(1));
  CHECK(!chain.maps[0].basepoint.empty());
  CHECK(!chain.maps[4].basepoint.empty());
}

TEST_CASE("piece verification separates its two conditions") {
  // Zero locus at x = 1 instead of x = 0: the first check fails.
  PieceMap off_base = piece("x", "t", std::nullopt, "x - 1", "t");
  VerifyReport r1 = verify_piece(off_base, "off_base");
  REQUIRE(r1.items.size() == 2);
  CHECK(!r1.items[0].ok);
  CHECK(r1.items[1].ok);  // at t = 1: {x - 1, 1} is the unit ideal

  // Components that still vanish somewhere at the tip: the second fails.
  PieceMap tip_hit = piece("x", "t", std::nullopt, "x", "x*t");
  VerifyReport r2 = verify_piece(tip_hit, "tip_hit");
  CHECK(r2.items[0].ok);
  CHECK(!r2.items[1].ok);

  PieceMap good = piece("x", "t", std::nullopt, "x", "(1 - t)*x + t");
  CHECK(verify_piece(good, "good").all_ok());
}

TEST_CASE("gluing failures are detected") {
  HomotopyChain chain = builtin_delta_R_chain();
  DMap broken = chain.maps[1];
  broken.piece_y.components.first = parse_poly("y + s + 1");
  VerifyReport report = verify_dmap(broken);
  CHECK(!report.all_ok());
  CHECK(!report.items.back().ok);  // the gluing item is last
}

TEST_CASE("homotopy endpoint checks") {
  HomotopyChain chain = builtin_delta_R_chain();
  HomotopyCertificate good{"H1", chain.homotopies[0], chain.maps[0],
                           chain.maps[1]};
  CHECK(verify_homotopy(good).all_ok());

  HomotopyCertificate wrong_end{"H1", chain.homotopies[0], chain.maps[0],
                                chain.maps[2]};
  VerifyReport report = verify_homotopy(wrong_end);
  CHECK(!report.all_ok());
}

TEST_CASE("a constant homotopy connects a map to itself") {
  HomotopyChain chain = builtin_delta_R_chain();
  DMap constant = chain.maps[1];
  constant.name = "const";
  constant.piece_x.homotopy_var = "u";
  constant.piece_y.homotopy_var = "u";
  CHECK(verify_homotopy({"const", constant, chain.maps[1], chain.maps[1]})
            .all_ok());
  CHECK(!verify_homotopy({"const", constant, chain.maps[1], chain.maps[2]})
             .all_ok());
}

TEST_CASE("reversing a homotopy swaps its endpoints") {
  HomotopyChain chain = builtin_delta_R_chain();
  for (std::size_t k = 0; k < chain.homotopies.size(); ++k) {
    HomotopyCertificate cert{chain.homotopies[k].name, chain.homotopies[k],
                             chain.maps[k], chain.maps[k + 1]};
    HomotopyCertificate back = reverse_homotopy(cert);
    CHECK(back.start.name == chain.maps[k + 1].name);
    CHECK(verify_homotopy(back).all_ok());
    // Reversing twice restores the original components.
    HomotopyCertificate twice = reverse_homotopy(back);
    CHECK(twice.homotopy.piece_x.components.first ==
          cert.homotopy.piece_x.components.first);
    CHECK(twice.homotopy.piece_y.components.second ==
          cert.homotopy.piece_y.components.second);
  }

  HomotopyCertificate no_param{"bad", chain.maps[0], chain.maps[0],
                               chain.maps[0]};
  CHECK_THROWS_AS(reverse_homotopy(no_param), DomainError);
}

TEST_CASE("piece evaluation") {
  HomotopyChain chain = builtin_delta_R_chain();
  const PieceMap& h1 = chain.homotopies[0].piece_x;
  auto at0 = evaluate_piece(h1, Rational(2), Rational(1, 2), Rational(0));
  // (1 - 1/2)*2 + 1/2 = 3/2
  CHECK(at0.first == Rational(2));
  CHECK(at0.second == Rational(3, 2));
  auto at1 = evaluate_piece(h1, Rational(2), Rational(1, 2), Rational(1));
  CHECK(at1.second == Rational(5, 2));  // x + t at (2, 1/2)
  CHECK_THROWS_AS(evaluate_piece(h1, Rational(1), Rational(0)), DomainError);
}

TEST_CASE("chain structure errors") {
  HomotopyChain chain = builtin_delta_R_chain();
  chain.homotopies.pop_back();
  VerifyReport report = verify_chain(chain);
  CHECK(!report.items[0].ok);
  CHECK(!report.all_ok());
}

TEST_CASE("loading the shipped chain document") {
  HomotopyInput input =
      load_homotopy_file(std::string(STEMCALC_DATA_DIR) + "/delta_R_chain.json");
  REQUIRE(input.chain.has_value());
  CHECK(!input.map.has_value());
  CHECK(input.chain->maps.size() == 5);
  CHECK(input.chain->homotopies.size() == 4);
  CHECK(verify_chain(*input.chain).all_ok());
  // Spot check that the parsed polynomials match the built-ins.
  HomotopyChain builtin = builtin_delta_R_chain();
  CHECK(input.chain->maps[0].piece_x.components.second ==
        builtin.maps[0].piece_x.components.second);
  CHECK(input.chain->homotopies[3].piece_y.components.second ==
        builtin.homotopies[3].piece_y.components.second);
}

TEST_CASE("document shape errors carry field paths") {
  CHECK_THROWS_AS(load_homotopy_text("{"), ParseError);
  CHECK_THROWS_AS(load_homotopy_text("[]"), DomainError);
  CHECK_THROWS_WITH_AS(load_homotopy_text("{\"other\": 1}"),
                       "document must contain one of 'map', 'certificate', "
                       "or 'chain'",
                       DomainError);
  CHECK_THROWS_WITH_AS(load_homotopy_text("{\"map\": {\"name\": \"m\"}}"),
                       "missing field 'map.piece_x'", DomainError);
  CHECK_THROWS_WITH_AS(
      load_homotopy_text(
          "{\"map\": {\"name\": \"m\", \"piece_x\": {\"variables\": [\"x\"],"
          " \"components\": [\"x\", \"t\"]}, \"piece_y\": {}}}"),
      "field 'map.piece_x.variables' must list two or three variable names",
      DomainError);
  CHECK_THROWS_WITH_AS(
      load_homotopy_text(
          "{\"map\": {\"name\": \"m\", \"piece_x\": {\"variables\":"
          " [\"x\", \"t\"], \"components\": [\"x\"]}, \"piece_y\": {}}}"),
      "field 'map.piece_x.components' must list exactly two polynomials",
      DomainError);
  // Bad polynomial text inside an otherwise well-formed document.
  CHECK_THROWS_AS(
      load_homotopy_text(
          "{\"map\": {\"name\": \"m\", \"piece_x\": {\"variables\":"
          " [\"x\", \"t\"], \"components\": [\"x\", \"2x\"]},"
          " \"piece_y\": {\"variables\": [\"y\", \"s\"],"
          " \"components\": [\"y\", \"y\"]}}}"),
      ParseError);
}

TEST_CASE("loading single maps and certificates") {
  std::string map_doc =
      "{\"map\": {\"name\": \"f1\","
      " \"piece_x\": {\"variables\": [\"x\", \"t\"],"
      " \"components\": [\"x\", \"x + t\"]},"
      " \"piece_y\": {\"variables\": [\"y\", \"s\"],"
      " \"components\": [\"y + s\", \"y\"]}}}";
  HomotopyInput input = load_homotopy_text(map_doc);
  REQUIRE(input.map.has_value());
  CHECK(verify_dmap(*input.map).all_ok());
  CHECK(input.map->piece_x.homotopy_var == std::nullopt);
}
