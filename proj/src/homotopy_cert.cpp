// Verification of piecewise polynomial maps and homotopies between them.
#include "stemcalc/homotopy_cert.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "stemcalc/groebner.hpp"
#include "stemcalc/poly_parse.hpp"

namespace stemcalc {

bool VerifyReport::all_ok() const {
  for (const auto& item : items)
    if (!item.ok) return false;
  return true;
}

void VerifyReport::merge(const VerifyReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

VerifyReport verify_piece(const PieceMap& piece, const std::string& label,
                          int max_pairs) {
  VerifyReport report;

  Ideal zero_locus({piece.components.first, piece.components.second});
  bool proper = radical_membership(MultiPoly::var(piece.main_var), zero_locus,
                                   max_pairs);
  report.items.push_back({label + ": components vanish only over " +
                              piece.main_var + " = 0",
                          proper, ""});

  std::map<std::string, MultiPoly> at_tip = {
      {piece.cone_var, MultiPoly(1)}};
  Ideal tip({piece.components.first.substitute(at_tip),
             piece.components.second.substitute(at_tip)});
  bool tip_clear = is_unit_ideal(tip, max_pairs);
  report.items.push_back(
      {label + ": tip of the cone avoids the chart", tip_clear, ""});
  return report;
}

VerifyReport verify_dmap(const DMap& map, int max_pairs) {
  VerifyReport report =
      verify_piece(map.piece_x, map.name + ".piece_x", max_pairs);
  report.merge(verify_piece(map.piece_y, map.name + ".piece_y", max_pairs));

  std::map<std::string, MultiPoly> base_x = {
      {map.piece_x.cone_var, MultiPoly(0)}};
  std::map<std::string, MultiPoly> base_y = {
      {map.piece_y.cone_var, MultiPoly(0)}};
  MultiPoly x1 = map.piece_x.components.first.substitute(base_x);
  MultiPoly x2 = map.piece_x.components.second.substitute(base_x);
  MultiPoly y1 = map.piece_y.components.first.substitute(base_y);
  MultiPoly y2 = map.piece_y.components.second.substitute(base_y);
  if (map.piece_y.main_var != map.piece_x.main_var) {
    y1 = y1.rename(map.piece_y.main_var, map.piece_x.main_var);
    y2 = y2.rename(map.piece_y.main_var, map.piece_x.main_var);
  }
  bool glued = x1 == y1 && x2 == y2;
  report.items.push_back(
      {map.name + ": charts agree along the base of the cone", glued, ""});
  return report;
}

namespace {

bool endpoint_matches(const DMap& homotopy, const DMap& target, int value,
                      std::string& note) {
  const PieceMap* hp[2] = {&homotopy.piece_x, &homotopy.piece_y};
  const PieceMap* tp[2] = {&target.piece_x, &target.piece_y};
  for (int side = 0; side < 2; ++side) {
    if (hp[side]->main_var != tp[side]->main_var ||
        hp[side]->cone_var != tp[side]->cone_var) {
      note = "chart variables disagree";
      return false;
    }
    MultiPoly c1 = hp[side]->components.first;
    MultiPoly c2 = hp[side]->components.second;
    if (hp[side]->homotopy_var) {
      std::map<std::string, MultiPoly> sub = {
          {*hp[side]->homotopy_var, MultiPoly(value)}};
      c1 = c1.substitute(sub);
      c2 = c2.substitute(sub);
    }
    if (!(c1 == tp[side]->components.first &&
          c2 == tp[side]->components.second)) {
      note = "components disagree";
      return false;
    }
  }
  return true;
}

}  // namespace

VerifyReport verify_homotopy(const HomotopyCertificate& cert, int max_pairs) {
  VerifyReport report = verify_dmap(cert.homotopy, max_pairs);
  std::string note0, note1;
  bool at0 = endpoint_matches(cert.homotopy, cert.start, 0, note0);
  bool at1 = endpoint_matches(cert.homotopy, cert.end, 1, note1);
  report.items.push_back({cert.name + ": equals " + cert.start.name +
                              " at parameter 0",
                          at0, note0});
  report.items.push_back(
      {cert.name + ": equals " + cert.end.name + " at parameter 1", at1,
       note1});
  return report;
}

VerifyReport verify_chain(const HomotopyChain& chain, int max_pairs) {
  VerifyReport report;
  bool count_ok =
      !chain.maps.empty() && chain.homotopies.size() + 1 == chain.maps.size();
  report.items.push_back(
      {chain.name + ": one homotopy per consecutive pair of maps", count_ok,
       ""});
  for (const auto& map : chain.maps)
    report.merge(verify_dmap(map, max_pairs));
  if (count_ok) {
    for (std::size_t k = 0; k < chain.homotopies.size(); ++k) {
      HomotopyCertificate cert{chain.homotopies[k].name, chain.homotopies[k],
                               chain.maps[k], chain.maps[k + 1]};
      std::string note0, note1;
      bool at0 = endpoint_matches(cert.homotopy, cert.start, 0, note0);
      bool at1 = endpoint_matches(cert.homotopy, cert.end, 1, note1);
      report.merge(verify_dmap(cert.homotopy, max_pairs));
      report.items.push_back({cert.name + ": equals " + cert.start.name +
                                  " at parameter 0",
                              at0, note0});
      report.items.push_back({cert.name + ": equals " + cert.end.name +
                                  " at parameter 1",
                              at1, note1});
    }
  }
  return report;
}

std::pair<Rational, Rational> evaluate_piece(
    const PieceMap& piece, const Rational& main_value,
    const Rational& cone_value, const std::optional<Rational>& homotopy_value) {
  std::map<std::string, Rational> bindings = {{piece.main_var, main_value},
                                              {piece.cone_var, cone_value}};
  if (piece.homotopy_var && homotopy_value)
    bindings.emplace(*piece.homotopy_var, *homotopy_value);
  return {piece.components.first.evaluate(bindings),
          piece.components.second.evaluate(bindings)};
}

HomotopyCertificate reverse_homotopy(const HomotopyCertificate& cert) {
  HomotopyCertificate out;
  out.name = cert.name + "-reversed";
  out.start = cert.end;
  out.end = cert.start;
  out.homotopy = cert.homotopy;
  out.homotopy.name += "-reversed";
  for (PieceMap* piece : {&out.homotopy.piece_x, &out.homotopy.piece_y}) {
    if (!piece->homotopy_var)
      throw DomainError("cannot reverse a homotopy without a parameter");
    std::map<std::string, MultiPoly> sub = {
        {*piece->homotopy_var,
         MultiPoly(1) - MultiPoly::var(*piece->homotopy_var)}};
    piece->components.first = piece->components.first.substitute(sub);
    piece->components.second = piece->components.second.substitute(sub);
  }
  return out;
}

namespace {

PieceMap make_piece(const std::string& main, const std::string& cone,
                    std::optional<std::string> homotopy, const std::string& c1,
                    const std::string& c2) {
  return {main, cone, std::move(homotopy), {parse_poly(c1), parse_poly(c2)}};
}

}  // namespace

HomotopyChain builtin_delta_R_chain() {
  HomotopyChain chain;
  chain.name = "delta-R";

  DMap delta{"delta", make_piece("x", "t", std::nullopt, "x", "(1 - t)*x + t"),
             make_piece("y", "s", std::nullopt, "(1 - s)*y + s", "y"),
             "piece_x fixes the point (1, 1)"};
  DMap f1{"f1", make_piece("x", "t", std::nullopt, "x", "x + t"),
          make_piece("y", "s", std::nullopt, "y + s", "y"), ""};
  DMap f2{"f2", make_piece("x", "t", std::nullopt, "x", "x + t"),
          make_piece("y", "s", std::nullopt, "y", "y - s"), ""};
  DMap f3{"f3", make_piece("x", "t", std::nullopt, "x", "t"),
          make_piece("y", "s", std::nullopt, "y", "-s"), ""};
  DMap R{"R", make_piece("x", "t", std::nullopt, "x", "-1 + 2*t"),
         make_piece("y", "s", std::nullopt, "y", "-1"),
         "piece_x fixes the point (1, 1)"};
  chain.maps = {delta, f1, f2, f3, R};

  DMap h1{"H1", make_piece("x", "t", "u", "x", "(1 - t + u*t)*x + t"),
          make_piece("y", "s", "u", "(1 - s + u*s)*y + s", "y"), ""};
  DMap h2{"H2", make_piece("x", "t", "u", "x", "x + t"),
          make_piece("y", "s", "u", "y + (1 - u)*s", "y - u*s"), ""};
  DMap h3{"H3", make_piece("x", "t", "u", "x", "x + t - u*x"),
          make_piece("y", "s", "u", "y", "y - s - u*y"), ""};
  DMap h4{"H4", make_piece("x", "t", "u", "x", "(1 - u)*t + u*(2*t - 1)"),
          make_piece("y", "s", "u", "y", "(u - 1)*s - u"), ""};
  chain.homotopies = {h1, h2, h3, h4};
  return chain;
}

// ---------------------------------------------------------------------------
// JSON loading.

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* field,
                          const std::string& path) {
  std::string full = path.empty() ? field : path + "." + field;
  if (!j.is_object() || !j.contains(field))
    throw DomainError("missing field '" + full + "'");
  return j.at(field);
}

std::string require_string(const json& j, const char* field,
                           const std::string& path) {
  const json& v = require_field(j, field, path);
  if (!v.is_string())
    throw DomainError("field '" + (path.empty() ? field : path + "." + field) +
                      "' must be a string");
  return v.get<std::string>();
}

PieceMap piece_from_json(const json& j, const std::string& path) {
  const json& vars = require_field(j, "variables", path);
  if (!vars.is_array() || (vars.size() != 2 && vars.size() != 3))
    throw DomainError("field '" + path +
                      ".variables' must list two or three variable names");
  for (const auto& v : vars)
    if (!v.is_string())
      throw DomainError("field '" + path +
                        ".variables' must contain only strings");
  const json& comps = require_field(j, "components", path);
  if (!comps.is_array() || comps.size() != 2)
    throw DomainError("field '" + path +
                      ".components' must list exactly two polynomials");
  for (const auto& c : comps)
    if (!c.is_string())
      throw DomainError("field '" + path +
                        ".components' must contain only strings");
  PieceMap piece;
  piece.main_var = vars[0].get<std::string>();
  piece.cone_var = vars[1].get<std::string>();
  if (vars.size() == 3) piece.homotopy_var = vars[2].get<std::string>();
  piece.components = {parse_poly(comps[0].get<std::string>()),
                      parse_poly(comps[1].get<std::string>())};
  return piece;
}

DMap dmap_from_json(const json& j, const std::string& path) {
  DMap map;
  map.name = require_string(j, "name", path);
  map.piece_x = piece_from_json(require_field(j, "piece_x", path),
                                path + ".piece_x");
  map.piece_y = piece_from_json(require_field(j, "piece_y", path),
                                path + ".piece_y");
  if (j.contains("basepoint")) {
    if (!j.at("basepoint").is_string())
      throw DomainError("field '" + path + ".basepoint' must be a string");
    map.basepoint = j.at("basepoint").get<std::string>();
  }
  return map;
}

}  // namespace

HomotopyInput load_homotopy_text(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!doc.is_object())
    throw DomainError("document must be a JSON object");

  HomotopyInput input;
  if (doc.contains("map")) {
    input.map = dmap_from_json(doc.at("map"), "map");
  } else if (doc.contains("certificate")) {
    const json& c = doc.at("certificate");
    HomotopyCertificate cert;
    cert.homotopy = dmap_from_json(require_field(c, "homotopy", "certificate"),
                                   "certificate.homotopy");
    cert.start = dmap_from_json(require_field(c, "start", "certificate"),
                                "certificate.start");
    cert.end = dmap_from_json(require_field(c, "end", "certificate"),
                              "certificate.end");
    cert.name = c.contains("name") ? require_string(c, "name", "certificate")
                                   : cert.homotopy.name;
    input.certificate = cert;
  } else if (doc.contains("chain")) {
    const json& c = doc.at("chain");
    HomotopyChain chain;
    chain.name =
        c.contains("name") ? require_string(c, "name", "chain") : "chain";
    const json& maps = require_field(c, "maps", "chain");
    if (!maps.is_array())
      throw DomainError("field 'chain.maps' must be an array");
    for (std::size_t i = 0; i < maps.size(); ++i)
      chain.maps.push_back(dmap_from_json(
          maps[i], "chain.maps[" + std::to_string(i) + "]"));
    const json& homotopies = require_field(c, "homotopies", "chain");
    if (!homotopies.is_array())
      throw DomainError("field 'chain.homotopies' must be an array");
    for (std::size_t i = 0; i < homotopies.size(); ++i)
      chain.homotopies.push_back(dmap_from_json(
          homotopies[i], "chain.homotopies[" + std::to_string(i) + "]"));
    input.chain = chain;
  } else {
    throw DomainError(
        "document must contain one of 'map', 'certificate', or 'chain'");
  }
  return input;
}

HomotopyInput load_homotopy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_homotopy_text(buffer.str());
}

}  // namespace stemcalc
