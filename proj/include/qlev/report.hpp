#pragma once

#include <string>
#include <vector>

namespace qlev {

struct Failure {
  std::string input, expected, actual;
};

// Outcome of one verification suite: deterministic case order, one entry
// per failed case.
struct Report {
  std::string suite;
  long cases = 0;
  long passed = 0;
  std::vector<Failure> failures;
  long millis = 0;

  void tally(bool ok, const std::string& input, const std::string& expected,
             const std::string& actual) {
    ++cases;
    if (ok)
      ++passed;
    else
      failures.push_back({input, expected, actual});
  }
  bool all_passed() const { return passed == cases; }
};

std::string to_json(const std::vector<Report>& reports);
std::string to_csv(const std::vector<Report>& reports);
std::string to_text(const std::vector<Report>& reports);

}  // namespace qlev
