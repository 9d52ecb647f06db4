// Packaged end-to-end verification: twelve independent criteria covering
// the doubling-algebra ladder, the coefficient-ring calculus, the melding
// derivations, and the certified homotopy chain.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stemcalc {

/// Outcome of one acceptance criterion.
struct CriterionResult {
  int index = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

/// Optional overrides: `seed` replaces the pinned sampling seeds of the
/// randomized criteria, `max_pairs` the S-pair bound of the ideal checks.
struct AcceptanceOptions {
  std::optional<unsigned long long> seed;
  std::optional<int> max_pairs;
};

/// Runs all twelve criteria and returns their results in order.  Each
/// criterion catches its own failures; a thrown error marks it failed with
/// the message as detail.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace stemcalc
