#pragma once
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

/*
 * Uniform result record for the verification checks: name, parameters,
 * verdict, witnesses on failure, wall time.  Machine output is one JSON
 * object per line on stdout; the human summary goes to stderr.
 */

namespace wba {

struct CheckReport {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  bool pass = false;
  std::vector<std::string> witnesses;
  double seconds = 0.0;
};

class Stopwatch {
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();

 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }
};

// machine record; wall time deliberately left out so that identical flags
// give byte-identical stdout (timing goes to the human summary instead)
inline nlohmann::ordered_json report_to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.name;
  j["params"] = r.params;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  j["witnesses"] = r.witnesses;
  return j;
}

inline void emit_reports(const std::vector<CheckReport>& reports,
                         std::ostream& machine, std::ostream& human) {
  for (const auto& r : reports)
    machine << report_to_json(r).dump() << "\n";
  int failed = 0;
  char buf[32];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
    human << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << buf
          << ")";
    if (!r.pass) {
      ++failed;
      for (const auto& w : r.witnesses) human << "\n      witness: " << w;
    }
    human << "\n";
  }
  human << reports.size() - failed << "/" << reports.size()
        << " checks passed\n";
}

}  // namespace wba
