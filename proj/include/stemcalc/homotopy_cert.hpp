// Certified verification of piecewise polynomial maps on glued affine
// lines: well-definedness of each piece, gluing, endpoint agreement of
// homotopies, and whole chains of maps connected by homotopies.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stemcalc/errors.hpp"
#include "stemcalc/groebner.hpp"
#include "stemcalc/polynomial.hpp"

namespace stemcalc {

// One affine chart of a map out of a cone: `main_var` is the chart
// coordinate, `cone_var` the cone coordinate (0 at the base of the cone,
// 1 at the tip), and `homotopy_var`, when present, an extra parameter the
// verification carries through unchanged.  The two components cut out the
// preimage of the target basepoint.
struct PieceMap {
  std::string main_var;
  std::string cone_var;
  std::optional<std::string> homotopy_var;
  std::pair<MultiPoly, MultiPoly> components;
};

// A map given by two charts that glue along the base of the cone.
struct DMap {
  std::string name;
  PieceMap piece_x;
  PieceMap piece_y;
  std::string basepoint;  // free-form note on the preserved basepoint
};

// A homotopy (a DMap carrying a homotopy variable) together with the two
// maps it claims to connect at parameter values 0 and 1.
struct HomotopyCertificate {
  std::string name;
  DMap homotopy;
  DMap start;
  DMap end;
};

// Maps m_0, ..., m_k and homotopies h_i connecting m_i to m_{i+1}.
struct HomotopyChain {
  std::string name;
  std::vector<DMap> maps;
  std::vector<DMap> homotopies;
};

struct VerifyItem {
  std::string name;
  bool ok = false;
  std::string note;
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  bool all_ok() const;
  void merge(const VerifyReport& other);
};

// Chart checks: the components vanish simultaneously only where the chart
// coordinate vanishes (radical membership), and at cone coordinate 1 the
// components generate the unit ideal, so the tip maps to the basepoint
// chart nowhere.
VerifyReport verify_piece(const PieceMap& piece, const std::string& label,
                          int max_pairs = kDefaultMaxPairs);

// Both chart checks plus gluing: the components of the two charts agree at
// cone coordinate 0 after identifying the chart coordinates.
VerifyReport verify_dmap(const DMap& map, int max_pairs = kDefaultMaxPairs);

// Chart and gluing checks for the homotopy, plus exact agreement with
// `start` at parameter 0 and with `end` at parameter 1.
VerifyReport verify_homotopy(const HomotopyCertificate& cert,
                             int max_pairs = kDefaultMaxPairs);

// Every map verified, every consecutive pair connected by the
// corresponding homotopy, and the homotopy count matches.
VerifyReport verify_chain(const HomotopyChain& chain,
                          int max_pairs = kDefaultMaxPairs);

// Value of the two components at a point of the chart.
std::pair<Rational, Rational> evaluate_piece(
    const PieceMap& piece, const Rational& main_value,
    const Rational& cone_value,
    const std::optional<Rational>& homotopy_value = std::nullopt);

// The same homotopy run backwards: parameter u becomes 1-u and the
// endpoints swap.
HomotopyCertificate reverse_homotopy(const HomotopyCertificate& cert);

// The pinned five-map chain from the diagonal-defect representative to
// the degree map of weight -1, with its four connecting homotopies.
HomotopyChain builtin_delta_R_chain();

// Parsed content of a certificate document: exactly one of the three
// shapes {"map": ...}, {"certificate": ...}, {"chain": ...}.
struct HomotopyInput {
  std::optional<DMap> map;
  std::optional<HomotopyCertificate> certificate;
  std::optional<HomotopyChain> chain;
};

// Parse a JSON document (DomainError carries the offending field path;
// ParseError reports malformed JSON or polynomial text).
HomotopyInput load_homotopy_text(const std::string& json_text);

// Read and parse a file (DomainError if it cannot be read).
HomotopyInput load_homotopy_file(const std::string& path);

}  // namespace stemcalc
