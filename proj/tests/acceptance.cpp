// End-to-end acceptance suite: one line per criterion, nonzero exit on any
// failure. Bounds, tolerances and time budgets are pinned here.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qlev/suites.hpp"

using namespace qlev;

namespace {

int g_failures = 0;

struct Criterion {
  std::string name;
  long budget_ms;
  std::vector<Report> reports;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  Criterion(std::string n, long budget) : name(std::move(n)), budget_ms(budget) {}

  void add(Report r) { reports.push_back(std::move(r)); }

  void finish(int number) {
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    long cases = 0, passed = 0;
    for (auto& r : reports) {
      cases += r.cases;
      passed += r.passed;
    }
    bool ok = (cases == passed) && cases > 0 && ms < budget_ms;
    if (!ok) ++g_failures;
    std::printf("criterion %2d (%s): %s  [%ld/%ld cases, %ld ms, budget %ld ms]\n",
                number, name.c_str(), ok ? "PASS" : "FAIL", passed, cases, ms,
                budget_ms);
    for (auto& r : reports)
      for (auto& f : r.failures)
        std::printf("    failed: %s | expected %s | got %s\n", f.input.c_str(),
                    f.expected.c_str(), f.actual.c_str());
    std::fflush(stdout);
  }
};

RunConfig base(long p, int m, int d) {
  RunConfig cfg;
  cfg.p = p;
  cfg.m = m;
  cfg.d = d;
  return cfg;
}

SuiteFn suite(const std::string& name) { return *find_suite(name); }

}  // namespace

int main() {
  // 1. Pascal/factorial agreement up to k = 40
  {
    Criterion c("pascal_factorial k<=40", 5000);
    RunConfig cfg = base(2, 1, 1);
    cfg.max_index = 40;
    c.add(suite("pascal_factorial")(cfg));
    c.finish(1);
  }
  // 2. level-m integrality for p in {2,3}, m in {0,1,2}
  {
    Criterion c("integrality Z[q] and localization", 30000);
    for (long p : {2L, 3L})
      for (int m : {0, 1, 2}) c.add(suite("integrality")(base(p, m, 1)));
    c.finish(2);
  }
  // 3. congruence of <k \ p^m> at q = 1
  {
    Criterion c("ipmq congruence", 60000);
    for (long p : {2L, 3L})
      for (int m : {1, 2}) c.add(suite("ipmq_congruence")(base(p, m, 1)));
    c.finish(3);
  }
  // 4. product identity and unit factorization
  {
    Criterion c("multiplicativity and clmus units", 60000);
    for (long p : {2L, 3L}) {
      c.add(suite("multiplicativity")(base(p, 1, 1)));
      for (int m : {1, 2}) c.add(suite("clmus_units")(base(p, m, 1)));
    }
    c.finish(4);
  }
  // 5. DP-algebra soundness (d = 1 exhaustive and 200 random d = 2 triples)
  {
    Criterion c("dp_mul soundness", 120000);
    c.add(suite("dp_soundness")(base(2, 1, 2)));
    c.add(suite("dp_integrality")(base(2, 0, 1)));
    c.add(suite("dp_integrality")(base(2, 1, 1)));
    c.finish(5);
  }
  // 6. comultiplication against the embedded coproduct; coassociativity
  {
    Criterion c("comultiplication", 120000);
    c.add(suite("comul")(base(2, 0, 1)));
    c.add(suite("comul")(base(2, 1, 1)));
    c.finish(6);
  }
  // 7. d o d = 0 in the cosimplicial, de Rham and jet complexes
  {
    Criterion c("d squared zero", 300000);
    for (int d : {1, 2}) {
      c.add(suite("cosimplicial")(base(2, 1, d)));
      c.add(suite("derham_dd")(base(2, 1, d)));
      c.add(suite("jet_dd")(base(2, 1, d)));
    }
    c.finish(7);
  }
  // 8. formal Poincare lemma
  {
    Criterion c("poincare resolution", 300000);
    RunConfig a = base(2, 1, 1);
    a.max_index = 8;
    c.add(suite("poincare")(a));
    RunConfig b = base(2, 0, 1);
    b.max_index = 8;
    c.add(suite("poincare")(b));
    RunConfig d2 = base(2, 1, 2);
    d2.max_index = 4;
    c.add(suite("poincare")(d2));
    c.finish(8);
  }
  // 9. plst identities and the quantum binomial formula
  {
    Criterion c("plst identities", 60000);
    c.add(suite("plst")(base(2, 1, 1)));
    c.add(suite("quantum_binomial")(base(2, 1, 2)));
    c.finish(9);
  }
  // 10. rg basis change and clpin divisibility
  {
    Criterion c("rg and clpin", 300000);
    c.add(suite("rg_basis")(base(2, 1, 1)));
    for (long p : {2L, 3L})
      for (int m : {0, 1}) c.add(suite("clpin")(base(p, m, 1)));
    c.finish(10);
  }
  // 11. homotopy machinery: well-definedness, h d + d h = Id - pi, and the
  //     truncated jet resolution
  {
    Criterion c("homotopy operator", 600000);
    for (int d : {1, 2}) c.add(suite("h_relations")(base(2, 1, d)));
    for (int d : {1, 2}) {
      RunConfig cfg = base(2, 1, d);
      cfg.max_index = 6;  // 2 p^m + 2
      cfg.max_degree = 2;
      c.add(suite("homotopy_identity")(cfg));
    }
    RunConfig cfg = base(2, 1, 1);
    cfg.max_index = 8;
    c.add(suite("qjfp_truncation")(cfg));
    c.finish(11);
  }
  // 12. cross-level consistency: m = 0 collapse and q = 1 specialization
  {
    Criterion c("cross-level consistency", 120000);
    c.add(suite("cross_level")(base(2, 0, 1)));
    c.add(suite("level0_collapse")(base(2, 0, 1)));
    for (long p : {2L, 3L})
      for (int m : {0, 1, 2}) c.add(suite("specialization")(base(p, m, 1)));
    c.finish(12);
  }

  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
