#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlev/coeff.hpp"
#include "qlev/report.hpp"

namespace qlev {

enum class OutFormat { json, csv, text };

struct RunConfig {
  long p = 2;
  int m = 1;
  int d = 1;
  int max_index = 8;
  int max_degree = 2;
  int xdeg_bound = 6;
  std::vector<std::string> suites;
  OutFormat format = OutFormat::text;
  std::string out_path;

  LevelCtx ctx() const { return LevelCtx(p, m, d); }
};

using SuiteFn = std::function<Report(const RunConfig&)>;

// fixed registry of verification suites, in a stable order
const std::vector<std::pair<std::string, SuiteFn>>& suite_registry();
std::optional<SuiteFn> find_suite(const std::string& name);
std::vector<std::string> suite_names();

// runs the selected (or all) suites in registry order
std::vector<Report> run_suites(const RunConfig& cfg);

}  // namespace qlev
