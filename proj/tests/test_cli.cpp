#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qlev/suites.hpp"

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(QLEV_CLI_PATH) + " " + args;
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit status contract") {
  CHECK(run("verify --suite pascal_factorial --max-index 6 > /dev/null") == 0);
  CHECK(run("verify --suite nonexistent 2> /dev/null") == 2);
  CHECK(run("--bad-flag 2> /dev/null") == 2);
  CHECK(run("table --kind bogus 2> /dev/null") == 2);
  CHECK(run("verify --p 4 --suite pascal_factorial 2> /dev/null") == 2);
}

TEST_CASE("table output") {
  CHECK(run("table --kind qbinom --max-index 2 --format csv --out "
            "/tmp/qlev_tbl.csv") == 0);
  std::string csv = slurp("/tmp/qlev_tbl.csv");
  CHECK(csv.find("2,1,\"1+q\"") != std::string::npos);
  CHECK(run("table --kind hl_angle --p 2 --m 1 --max-index 4 --format csv "
            "--out /tmp/qlev_tbl2.csv") == 0);
  std::string csv2 = slurp("/tmp/qlev_tbl2.csv");
  CHECK(csv2.find("4,2,\"1+q+q^2\"") != std::string::npos);
  // empty sweep gives a header-only table
  CHECK(run("table --kind qbinom --max-index 0 --format csv --out "
            "/tmp/qlev_tbl3.csv") == 0);
  CHECK(slurp("/tmp/qlev_tbl3.csv") == "k,k',value\n");
}

TEST_CASE("io errors exit nonzero") {
  CHECK(run("table --kind qbinom --max-index 2 --out "
            "/nonexistent-dir/t.csv 2> /dev/null") == 1);
}

TEST_CASE("json determinism") {
  std::string args =
      "verify --suite pascal_factorial --suite homotopy_identity "
      "--max-index 4 --format json --out ";
  CHECK(run(args + "/tmp/qlev_a.json") == 0);
  CHECK(run(args + "/tmp/qlev_b.json") == 0);
  std::string a = slurp("/tmp/qlev_a.json"), b = slurp("/tmp/qlev_b.json");
  CHECK(!a.empty());
  CHECK(a == b);
}

TEST_CASE("library-level report rendering") {
  qlev::RunConfig cfg;
  cfg.suites = {"ipmq_congruence"};
  auto reports = qlev::run_suites(cfg);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].all_passed());
  CHECK(qlev::to_csv(reports).find("ipmq_congruence,5,5,0") !=
        std::string::npos);
  CHECK(qlev::to_text(reports).find("PASS ipmq_congruence") !=
        std::string::npos);
}
