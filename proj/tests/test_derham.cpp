#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlev/derham.hpp"

using namespace qlev;

namespace {

IntPolyQ ipoly(std::initializer_list<long> cs) {
  std::vector<mpz_class> v;
  for (long c : cs) v.emplace_back(c);
  return IntPolyQ(std::move(v));
}

RatFuncQ rq(std::initializer_list<long> cs) { return RatFuncQ(ipoly(cs)); }

TensorElem word(int degree, std::vector<MultiIndex> w, const XPoly& c) {
  TensorElem t(degree);
  t.add_term(w, c);
  return t;
}

// (-x)^{(k)_q} in one variable
XPoly neg_x_pow(int k) {
  long e = static_cast<long>(k) * (k - 1) / 2;
  RatFuncQ c(IntPolyQ::q_power(static_cast<int>(e),
                               (k % 2 == 0) ? mpz_class(1) : mpz_class(-1)));
  return XPoly::monomial(MultiIndex({k}), c);
}

}  // namespace

TEST_CASE("derham_reduce kills non-surviving factors") {
  LevelCtx ctx(2, 1, 2);
  XPoly one(RatFuncQ(1), 2);
  // a factor xi^{{1}} with p^m > 1 dies
  CHECK(derham_reduce(word(1, {MultiIndex({1, 0})}, one), false, ctx)
            .is_zero());
  // xibar_1 (x)' xibar_1 = 0
  MultiIndex f1({2, 0}), f2({0, 2});
  CHECK(derham_reduce(word(2, {f1, f1}, one), false, ctx).is_zero());
  // xibar_2 (x)' xibar_1 = -(xibar_1 /\ xibar_2)
  DeRhamElem r = derham_reduce(word(2, {f2, f1}, one), false, ctx);
  DeRhamElem expect(2);
  expect.add_term({MultiIndex({0, 0}), {0, 1}}, -one);
  CHECK(r == expect);
  // non-normalized input rejected
  CHECK_THROWS_AS(
      derham_reduce(word(1, {MultiIndex({0, 0})}, one), false, ctx),
      std::invalid_argument);
}

TEST_CASE("derham differential examples") {
  LevelCtx ctx(2, 1, 1);
  XPoly one(RatFuncQ(1), 1);
  DeRhamElem e0(0);
  e0.add_term({MultiIndex({1}), {}}, one);
  CHECK(derham_d(e0, ctx).is_zero());  // k < p^m
  DeRhamElem e2(0);
  e2.add_term({MultiIndex({2}), {}}, one);
  DeRhamElem d2 = derham_d(e2, ctx);
  DeRhamElem expect(1);
  expect.add_term({MultiIndex({0}), {0}}, one);  // <2\2> = 1
  CHECK(d2 == expect);
  DeRhamElem e4(0);
  e4.add_term({MultiIndex({4}), {}}, one);
  DeRhamElem d4 = derham_d(e4, ctx);
  DeRhamElem expect4(1);
  expect4.add_term({MultiIndex({2}), {0}}, XPoly(rq({1, 1, 1}), 1));
  CHECK(d4 == expect4);
}

TEST_CASE("d o d = 0 in the de Rham complex") {
  for (long p : {2L, 3L}) {
    LevelCtx ctx(p, 1, 2);
    int bound = 2 * static_cast<int>(ctx.pm()) + 2;
    for (auto& k : multi_of_total(2, bound)) {
      for (int r = 0; r <= 2; ++r) {
        std::vector<std::vector<int>> wedges;
        if (r == 0) wedges = {{}};
        if (r == 1) wedges = {{0}, {1}};
        if (r == 2) wedges = {{0, 1}};
        for (auto& s : wedges) {
          DeRhamElem e(r);
          e.add_term({k, s}, XPoly(RatFuncQ(1), 2));
          CHECK(derham_d(derham_d(e, ctx), ctx).is_zero());
        }
      }
    }
  }
}

TEST_CASE("quotient compatibility with the linearized differential") {
  LevelCtx ctx(2, 1, 1);
  XPoly one(RatFuncQ(1), 1);
  // degree 0 of LNP: words xi^{{K}}
  for (int k = 0; k <= 5; ++k) {
    TensorElem t = word(1, {MultiIndex({k})}, one);
    CHECK(derham_reduce(cosimplicial_d(t, true, ctx), true, ctx) ==
          derham_d(derham_reduce(t, true, ctx), ctx));
  }
  // degree 1 of LNP: words xi^{{K}} (x)' xi^{{f}}, f != 0
  for (int k = 0; k <= 4; ++k)
    for (int f = 1; f <= 4; ++f) {
      TensorElem t = word(2, {MultiIndex({k}), MultiIndex({f})}, one);
      CHECK(derham_reduce(cosimplicial_d(t, true, ctx), true, ctx) ==
            derham_d(derham_reduce(t, true, ctx), ctx));
    }
  // d = 2 spot checks in degree 1
  LevelCtx c2(2, 1, 2);
  XPoly one2(RatFuncQ(1), 2);
  for (auto& k : multi_of_total(2, 3))
    for (auto& f : {MultiIndex({2, 0}), MultiIndex({1, 1}), MultiIndex({0, 2})}) {
      TensorElem t(2);
      t.add_term({k, f}, one2);
      CHECK(derham_reduce(cosimplicial_d(t, true, c2), true, c2) ==
            derham_d(derham_reduce(t, true, c2), c2));
    }
}

TEST_CASE("angle coefficients <k \\ p^m> are units") {
  for (long p : {2L, 3L})
    for (int m : {1, 2}) {
      LevelCtx ctx(p, m, 1);
      long pm = ctx.pm();
      for (long k = pm; k <= 3 * pm; ++k)
        CHECK(is_unit_localized(hl_angle(k, pm, ctx)));
    }
}

TEST_CASE("beta and iota") {
  LevelCtx ctx(2, 1, 1);
  XPoly one(RatFuncQ(1), 1);
  CopiesElem e0, e1;
  e0.add_term(MultiIndex({0}), one);
  e1.add_term(MultiIndex({1}), one);
  CHECK(beta(e0, ctx) == e0);
  // beta(e_1) = e_1 - x e_0
  CopiesElem b1 = beta(e1, ctx);
  CopiesElem expect;
  expect.add_term(MultiIndex({1}), one);
  expect.add_term(MultiIndex({0}), XPoly::var(1, 0, RatFuncQ(-1)));
  CHECK(b1 == expect);
  CHECK(beta_inverse(beta(e1, ctx), ctx) == e1);
  // iota'(e_0) = 1; iota(e_1) = xi^{{1}} + x
  DeRhamElem i0 = iota_prime(e0, ctx);
  DeRhamElem ex0(0);
  ex0.add_term({MultiIndex({0}), {}}, one);
  CHECK(i0 == ex0);
  DeRhamElem i1 = iota(e1, ctx);
  DeRhamElem ex1(0);
  ex1.add_term({MultiIndex({1}), {}}, one);
  ex1.add_term({MultiIndex({0}), {}}, XPoly::var(1, 0, RatFuncQ(1)));
  CHECK(i1 == ex1);
  // d(iota(e_k)) = 0 for all box k
  for (int k = 0; k < 2; ++k) {
    CopiesElem e;
    e.add_term(MultiIndex({k}), one);
    CHECK(derham_d(iota(e, ctx), ctx).is_zero());
  }
}

TEST_CASE("formal Poincare lemma at desk scale") {
  CHECK(verify_poincare(8, LevelCtx(2, 1, 1)).all_passed());
  CHECK(verify_poincare(6, LevelCtx(2, 0, 1)).all_passed());
  CHECK(verify_poincare(4, LevelCtx(2, 1, 2)).all_passed());
}

TEST_CASE("istra vanishing") {
  // sum_{l'' <= l' <= l} C(l,l')_q C(l',l'')_q (-x)^{(l-l')_q} x^{l'-l''} = 0
  for (int l = 1; l <= 6; ++l)
    for (int lpp = 0; lpp < l; ++lpp) {
      XPoly sum;
      for (int lp = lpp; lp <= l; ++lp) {
        RatFuncQ c = q_binom_q(l, lp) * q_binom_q(lp, lpp);
        XPoly t = neg_x_pow(l - lp) *
                  XPoly::monomial(MultiIndex({lp - lpp}), RatFuncQ(1));
        sum += t.scaled(c);
      }
      CHECK(sum.is_zero());
    }
}

TEST_CASE("hstr identity") {
  // tau(xi^{{l'}}) = sum_{l'' <= l'} C(l'\l'')_q theta((-x)^{(l'')_q}) x^{l'-l''}
  LevelCtx ctx(2, 1, 1);
  for (int lp = 0; lp < static_cast<int>(ctx.pm()); ++lp) {
    DPElem lhs = flip(DPElem::generator(MultiIndex({lp})), ctx);
    DPElem rhs;
    for (int lpp = 0; lpp <= lp; ++lpp) {
      DPElem t = taylor(neg_x_pow(lpp), ctx)
                     .scaled(XPoly::monomial(MultiIndex({lp - lpp}),
                                             q_binom_q(lp, lpp)));
      rhs += t;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("plst diagram on beta images") {
  // (ssttrr) == (bstr): both sides are elements of F_A (x) A<xi>
  LevelCtx ctx(2, 1, 1);
  for (int k = 0; k < static_cast<int>(ctx.pm()); ++k) {
    // components on e_j of each side, as DP elements
    std::map<int, DPElem> lhs, rhs;
    for (int kp = 0; kp <= k; ++kp) {
      RatFuncQ ckkp = q_binom_q(k, kp);
      DPElem tau = flip(DPElem::generator(MultiIndex({k - kp})), ctx);
      for (int kpp = 0; kpp <= kp; ++kpp) {
        RatFuncQ c = ckkp * q_binom_q(kp, kpp);
        DPElem t = tau.scaled(neg_x_pow(kpp)).scaled(c);
        lhs[kp - kpp] += t;
      }
      DPElem th = taylor(neg_x_pow(kp), ctx).scaled(ckkp);
      rhs[k - kp] += th;
    }
    for (int j = 0; j <= k; ++j) CHECK(lhs[j] == rhs[j]);
  }
}
