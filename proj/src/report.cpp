// Text and JSON rendering of command results.
#include "stemcalc/report.hpp"

#include <sstream>

#include <json.hpp>

namespace stemcalc {

std::string Report::render_text() const {
  std::ostringstream out;
  out << verdict << "\n";
  for (const auto& d : details) {
    out << (d.ok ? "ok   " : "FAIL ") << d.name;
    if (!d.note.empty()) out << " (" << d.note << ")";
    out << "\n";
  }
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& s = trace[i];
    out << (i + 1) << ". " << s.rule << " [" << s.ref << "]: " << s.before
        << "  ~>  " << s.after;
    if (!s.params.empty()) out << "  {" << s.params << "}";
    out << "\n";
  }
  return out.str();
}

std::string Report::render_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["ok"] = ok;
  j["verdict"] = verdict;
  j["details"] = nlohmann::ordered_json::array();
  for (const auto& d : details) {
    nlohmann::ordered_json item;
    item["name"] = d.name;
    item["ok"] = d.ok;
    item["note"] = d.note;
    j["details"].push_back(item);
  }
  j["trace"] = nlohmann::ordered_json::array();
  for (const auto& s : trace) {
    nlohmann::ordered_json item;
    item["rule"] = s.rule;
    item["ref"] = s.ref;
    item["before"] = s.before;
    item["after"] = s.after;
    item["params"] = s.params;
    j["trace"].push_back(item);
  }
  return j.dump(2) + "\n";
}

}  // namespace stemcalc
