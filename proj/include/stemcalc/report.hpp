// Uniform result reporting for the command-line tool: a headline verdict,
// per-check details, and an optional derivation trace, rendered as plain
// text or as stable JSON.
#pragma once

#include <string>
#include <vector>

namespace stemcalc {

struct SubResult {
  std::string name;
  bool ok = false;
  std::string note;
};

struct TraceStepView {
  std::string rule;
  std::string ref;
  std::string before;
  std::string after;
  std::string params;
};

struct Report {
  std::string command;
  bool ok = false;
  std::string verdict;
  std::vector<SubResult> details;
  std::vector<TraceStepView> trace;

  std::string render_text() const;
  // Two-space-indented JSON with a trailing newline; field order is fixed,
  // so rendering, parsing, and re-rendering reproduces the bytes exactly.
  std::string render_json() const;
};

}  // namespace stemcalc
