// Runs the twelve acceptance criteria and prints one line per criterion.
#include <cstdio>

#include "stemcalc/acceptance.hpp"

int main() {
  auto results = stemcalc::run_acceptance();
  bool all_passed = true;
  for (const auto& r : results) {
    std::printf("%s  criterion %2d: %s\n", r.passed ? "PASS" : "FAIL",
                r.index, r.title.c_str());
    if (!r.detail.empty()) std::printf("      %s\n", r.detail.c_str());
    if (!r.passed) all_passed = false;
  }
  std::printf("%s\n", all_passed ? "all criteria passed"
                                 : "some criteria FAILED");
  return all_passed ? 0 : 1;
}
