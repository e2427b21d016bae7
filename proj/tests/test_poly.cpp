#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlev/poly_ops.hpp"

using namespace qlev;

namespace {

IntPolyQ ipoly(std::initializer_list<long> cs) {
  std::vector<mpz_class> v;
  for (long c : cs) v.emplace_back(c);
  return IntPolyQ(std::move(v));
}

RatFuncQ rq(std::initializer_list<long> cs) { return RatFuncQ(ipoly(cs)); }

FullPoly term(std::vector<int> xe, std::vector<int> xie, const RatFuncQ& c) {
  return FullPoly::monomial(
      Mono{MultiIndex(std::move(xe)), MultiIndex(std::move(xie))}, c);
}

// deterministic small random polynomials
struct Rng {
  unsigned long s = 88172645463325252ull;
  unsigned long next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long pick(long n) { return static_cast<long>(next() % n); }
};

FullPoly random_poly(Rng& rng, const LevelCtx& ctx) {
  FullPoly r(RatFuncQ(0), ctx.d, ctx.d);
  int nterms = 1 + static_cast<int>(rng.pick(3));
  for (int t = 0; t < nterms; ++t) {
    MultiIndex xe = MultiIndex::zeros(ctx.d), xie = MultiIndex::zeros(ctx.d);
    for (int i = 0; i < ctx.d; ++i) {
      xe[i] = static_cast<int>(rng.pick(3));
      xie[i] = static_cast<int>(rng.pick(3));
    }
    std::vector<mpz_class> cs;
    for (long j = 0; j <= rng.pick(2); ++j) cs.emplace_back(rng.pick(7) - 3);
    r.add_term(Mono{xe, xie}, RatFuncQ(IntPolyQ(cs)));
  }
  return r;
}

}  // namespace

TEST_CASE("twisted powers") {
  LevelCtx ctx(2, 1, 1);
  CHECK(twisted_power(0, 0, ctx) == FullPoly(RatFuncQ(1), 1, 1));
  CHECK(twisted_power(0, 1, ctx) == term({0}, {1}, RatFuncQ(1)));
  // xi^2 + (1-q) x xi
  FullPoly expect =
      term({0}, {2}, RatFuncQ(1)) + term({1}, {1}, rq({1, -1}));
  CHECK(twisted_power(0, 2, ctx) == expect);
}

TEST_CASE("twisted power recursion") {
  LevelCtx ctx(3, 1, 1);
  for (long k = 0; k <= 6; ++k) {
    // xi^{(k+1)_q} = xi^{(k)_q} * (xi + (1-q^k) x)
    FullPoly lhs = twisted_power(0, k + 1, ctx);
    FullPoly fac =
        term({0}, {1}, RatFuncQ(1)) +
        term({1}, {0},
             RatFuncQ(IntPolyQ(1) - IntPolyQ::q_power(static_cast<int>(k))));
    CHECK(lhs == twisted_power(0, k, ctx) * fac);
  }
}

TEST_CASE("multi-index twisted powers") {
  LevelCtx ctx(2, 1, 2);
  CHECK(twisted_power_multi(MultiIndex({0, 0}), ctx) ==
        FullPoly(RatFuncQ(1), 2, 2));
  CHECK(twisted_power_multi(MultiIndex({1, 1}), ctx) ==
        term({0, 0}, {1, 1}, RatFuncQ(1)));
  LevelCtx c1(2, 1, 1);
  FullPoly expect =
      term({0}, {2}, RatFuncQ(1)) + term({1}, {1}, rq({1, -1}));
  CHECK(twisted_power_multi(MultiIndex({2}), c1) == expect);
}

TEST_CASE("frobenius on generators") {
  LevelCtx ctx(2, 1, 1);
  FullPoly x = x_var(ctx, 0), xi = xi_var(ctx, 0);
  CHECK(frobenius(x, 1, ctx) == x.pow(2));
  CHECK(frobenius(FullPoly(q_scalar(), 1, 1), 1, ctx) ==
        FullPoly(q_scalar(2), 1, 1));
  // p = 2: phi(xi) = xi^2 + 2 x xi
  CHECK(frobenius(xi, 1, ctx) ==
        term({0}, {2}, RatFuncQ(1)) + term({1}, {1}, RatFuncQ(2)));
  // iterate = compose
  CHECK(frobenius(xi, 2, ctx) == frobenius(frobenius(xi, 1, ctx), 1, ctx));
}

TEST_CASE("frobenius is a ring homomorphism") {
  Rng rng;
  for (long p : {2L, 3L}) {
    LevelCtx ctx(p, 1, 2);
    for (int trial = 0; trial < 8; ++trial) {
      FullPoly f = random_poly(rng, ctx), g = random_poly(rng, ctx);
      CHECK(frobenius(f * g, 1, ctx) ==
            frobenius(f, 1, ctx) * frobenius(g, 1, ctx));
      CHECK(frobenius(f + g, 1, ctx) ==
            frobenius(f, 1, ctx) + frobenius(g, 1, ctx));
    }
  }
}

TEST_CASE("rank one witness: phi(x + xi) = (x + xi)^p") {
  for (long p : {2L, 3L, 5L}) {
    LevelCtx ctx(p, 1, 1);
    FullPoly s = x_var(ctx, 0) + xi_var(ctx, 0);
    CHECK(frobenius(s, 1, ctx) == s.pow(static_cast<int>(p)));
  }
}

TEST_CASE("quantum binomial formula") {
  LevelCtx ctx(2, 1, 2);
  FullPoly a = x_var(ctx, 0), b = x_var(ctx, 1);
  CHECK(quantum_binomial_expand(a, b, 0) == FullPoly(RatFuncQ(1), 2, 2));
  CHECK(quantum_binomial_expand(a, b, 1) == a + b);
  // k = 2: q a^2 + (1+q) ab + b^2
  FullPoly expect = a.pow(2).scaled(rq({0, 1})) + (a * b).scaled(rq({1, 1})) +
                    b.pow(2);
  CHECK(quantum_binomial_expand(a, b, 2) == expect);
  // the operation itself cross-checks product vs closed form; sweep k
  for (long k = 3; k <= 8; ++k)
    CHECK(!quantum_binomial_expand(a, b, k).is_zero());
}
