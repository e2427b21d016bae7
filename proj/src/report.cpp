#include "qlev/report.hpp"

#include <json.hpp>
#include <sstream>

namespace qlev {

std::string to_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["cases"] = r.cases;
    j["passed"] = r.passed;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures)
      j["failures"].push_back({{"input", f.input},
                               {"expected", f.expected},
                               {"actual", f.actual}});
    j["millis"] = r.millis;
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

std::string to_csv(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "suite,cases,passed,failed,millis\n";
  for (const auto& r : reports)
    os << r.suite << "," << r.cases << "," << r.passed << ","
       << (r.cases - r.passed) << "," << r.millis << "\n";
  return os.str();
}

std::string to_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.all_passed() ? "PASS" : "FAIL") << " " << r.suite << ": "
       << r.passed << "/" << r.cases << " cases";
    if (r.millis > 0) os << " (" << r.millis << " ms)";
    os << "\n";
    for (const auto& f : r.failures) {
      os << "  case " << f.input << "\n    expected: " << f.expected
         << "\n    actual:   " << f.actual << "\n";
    }
  }
  return os.str();
}

}  // namespace qlev
