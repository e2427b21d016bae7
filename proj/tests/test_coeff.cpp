#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlev/coeff.hpp"

using namespace qlev;

namespace {

IntPolyQ poly(std::initializer_list<long> cs) {
  std::vector<mpz_class> v;
  for (long c : cs) v.emplace_back(c);
  return IntPolyQ(std::move(v));
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_int(3) == poly({1, 1, 1}));
  CHECK(q_int(0, 5).is_zero());
  LevelCtx ctx(2, 1, 1);
  CHECK(q_int(2, ctx.ppow(1)) == poly({1, 0, 1}));  // (2)_{q^2}
  CHECK(q_int(1) == poly({1}));
}

TEST_CASE("q-factorial") {
  CHECK(q_factorial(0).is_one());
  CHECK(q_factorial(2) == poly({1, 1}));
  CHECK(q_factorial(3) == poly({1, 1}) * poly({1, 1, 1}));
}

TEST_CASE("q-binomial via Pascal") {
  CHECK(q_binom_pascal(2, 1) == poly({1, 1}));
  CHECK(q_binom_pascal(0, 3).is_zero());
  CHECK(q_binom_pascal(3, 5).is_zero());
  CHECK(q_binom_pascal(4, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(q_binom_pascal(0, 0).is_one());
}

TEST_CASE("q-binomial via factorials agrees with Pascal") {
  CHECK(q_binom_factorial(4, 2).is_polynomial());
  CHECK(q_binom_factorial(4, 2).num() == poly({1, 1, 2, 1, 1}));
  CHECK(q_binom_factorial(5, 0).is_one());
  CHECK(q_binom_factorial(5, 5).is_one());
  for (long k = 0; k <= 12; ++k)
    for (long kp = 0; kp <= k; ++kp) {
      RatFuncQ f = q_binom_factorial(k, kp);
      REQUIRE(f.is_polynomial());
      CHECK(f.num() == q_binom_pascal(k, kp));
    }
  CHECK_THROWS_AS(q_binom_factorial(2, 3), std::invalid_argument);
}

TEST_CASE("multiplicativity (nn')_q = (n)_q (n')_{q^n}") {
  for (long p : {2L, 3L})
    for (int j = 0; j <= 2; ++j) {
      LevelCtx ctx(p, 0, 1);
      int e = static_cast<int>(ctx.ppow(j));
      for (long n = 0; n <= 12; ++n)
        for (long np = 0; np <= 12; ++np)
          CHECK(q_int(n * np, e) == q_int(n, e) * q_int(np, e * n));
    }
}

TEST_CASE("brace coefficients of higher level") {
  LevelCtx ctx(2, 1, 1);
  CHECK(hl_brace(4, 2, ctx) == poly({1, 0, 1}));  // (2)_{q^2}
  CHECK(hl_brace(7, 0, ctx).is_one());
  CHECK(hl_brace(2, 1, ctx).is_one());
  // r = r' + r'' + 1 case: k=2,k'=1 gives r=1, r'=r''=0
  CHECK(hl_brace(6, 3, ctx) == q_int(3, 2) * q_int(2, 2));
}

TEST_CASE("angle coefficients of higher level") {
  LevelCtx ctx(2, 1, 1);
  CHECK(hl_angle(4, 2, ctx).value == RatFuncQ(poly({1, 1, 1})));
  CHECK(hl_angle(5, 5, ctx).value.is_one());
  CHECK(hl_angle(2, 1, ctx).value == RatFuncQ(poly({1, 1})));
  // genuinely fractional value: <6\3>_(1),q = (2)_q (5)_q / (3)_q at p=2
  RatFuncQ v = hl_angle(6, 3, ctx).value;
  CHECK(!v.is_polynomial());
  CHECK(v == RatFuncQ(q_int(2) * q_int(5), q_int(3)));
}

TEST_CASE("multi-index coefficients") {
  LevelCtx ctx(2, 1, 2);
  MultiIndex k({4, 2}), kp({2, 1});
  CHECK(hl_angle_multi(k, kp, ctx).value ==
        RatFuncQ(poly({1, 1, 1}) * poly({1, 1})));
  CHECK(hl_angle_multi(k, k, ctx).value.is_one());
  CHECK(hl_brace_multi(k, MultiIndex({0, 0}), ctx).is_one());
  CHECK(q_binom_multi(k, kp) == q_binom_pascal(4, 2) * q_binom_pascal(2, 1));
  CHECK_THROWS_AS(hl_angle_multi(kp, k, ctx), std::invalid_argument);
}

TEST_CASE("localization membership") {
  RatFuncQ bad(IntPolyQ(1), poly({1, 1}));       // 1/(1+q)
  RatFuncQ good(IntPolyQ(1), poly({1, 1, 1}));   // 1/(1+q+q^2)
  CHECK(!in_localized(bad, 2).has_value());
  CHECK(in_localized(good, 2).has_value());
  CHECK(in_localized(RatFuncQ(poly({3, 7, 5})), 2).has_value());
  CHECK(!in_localized(good, 3).has_value());
}

TEST_CASE("units in the localization") {
  for (int j = 0; j <= 3; ++j) {
    LevelCtx ctx(2, 0, 1);
    auto u = in_localized(RatFuncQ(q_int(3, ctx.ppow(j))), 2);
    REQUIRE(u.has_value());
    CHECK(is_unit_localized(*u));
  }
  auto two = in_localized(RatFuncQ(q_int(2)), 2);
  REQUIRE(two.has_value());
  CHECK(!is_unit_localized(*two));
  auto one = in_localized(RatFuncQ(1), 2);
  CHECK(is_unit_localized(*one));
}

TEST_CASE("unit factorization (p^m r + s)_q = u (s)_q") {
  LevelCtx c21(2, 1, 1);
  CHECK(clmus_unit(2, 1, c21).value == RatFuncQ(q_int(5)));
  CHECK(clmus_unit(0, 1, c21).value.is_one());
  LevelCtx c31(3, 1, 1);
  CHECK(clmus_unit(1, 2, c31).value == RatFuncQ(q_int(5), q_int(2)));
  // every unit certifies: q_int(p^m r + s) == u * q_int(s) exactly
  for (long p : {2L, 3L})
    for (int m : {1, 2}) {
      LevelCtx ctx(p, m, 1);
      for (long r = 0; r <= 4; ++r)
        for (long s = 1; s < ctx.pm(); ++s) {
          LocalizedQ u = clmus_unit(r, s, ctx);
          CHECK(u.value * RatFuncQ(q_int(s)) == RatFuncQ(q_int(ctx.pm() * r + s)));
        }
    }
}

TEST_CASE("level-0 collapse") {
  LevelCtx ctx(2, 0, 1);
  for (long k = 0; k <= 8; ++k)
    for (long kp = 0; kp <= k; ++kp) {
      CHECK(hl_brace(k, kp, ctx) == q_binom_pascal(k, kp));
      CHECK(hl_angle(k, kp, ctx).value.is_one());
    }
}

TEST_CASE("specialization at q = 1 matches classical values") {
  for (long p : {2L, 3L})
    for (int m : {0, 1, 2}) {
      LevelCtx ctx(p, m, 1);
      long bound = 3 * ctx.pm() + p;
      for (long k = 0; k <= bound; ++k)
        for (long kp = 0; kp <= k; ++kp) {
          RatFuncQ v = hl_angle(k, kp, ctx).value;
          mpq_class got(v.num().eval_one(), v.den().eval_one());
          got.canonicalize();
          CHECK(got == classical_angle(k, kp, ctx));
          CHECK(hl_brace(k, kp, ctx).eval_one() == classical_brace(k, kp, ctx));
        }
    }
}

TEST_CASE("congruence of <k \\ p^m> at q = 1") {
  for (long p : {2L, 3L})
    for (int m : {1, 2}) {
      LevelCtx ctx(p, m, 1);
      long pm = ctx.pm();
      for (long k = pm; k <= 3 * pm; ++k) {
        // congruent to 1 in Z_(p): numerator == denominator mod p
        mpq_class v = classical_angle(k, pm, ctx);
        CHECK(v.get_den() % p != 0);
        CHECK((v.get_num() - v.get_den()) % p == 0);
      }
    }
}

#include <thread>

TEST_CASE("coefficient caches are safe under concurrent sweeps") {
  LevelCtx ctx(2, 1, 1);
  std::vector<std::thread> pool;
  std::vector<int> bad(4, 0);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (long k = 0; k <= 20; ++k)
        for (long kp = 0; kp <= k; ++kp) {
          if (!(q_binom_factorial(k, kp).num() == q_binom_pascal(k, kp)))
            bad[t] = 1;
          if (!in_localized(hl_angle_q(k, kp, ctx), 2)) bad[t] = 1;
        }
    });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 4; ++t) CHECK(bad[t] == 0);
}
