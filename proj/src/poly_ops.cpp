#include "qlev/poly_ops.hpp"

namespace qlev {

FullPoly twisted_power_of(const FullPoly& base, long k, const FullPoly& y,
                          int e) {
  FullPoly r(RatFuncQ(1));
  if (!base.terms().empty()) {
    const Mono& m = base.terms().begin()->first;
    r = FullPoly(RatFuncQ(1), m.x.dim(), m.xi.dim());
  }
  for (long j = 0; j < k; ++j)
    r *= base + y.scaled(RatFuncQ(q_int(j, e)));
  return r;
}

FullPoly twisted_power(int i, long k, const XPoly& y, const LevelCtx& ctx) {
  return twisted_power_of(xi_var(ctx, i), k, FullPoly::from_xpoly(y, ctx.d));
}

FullPoly twisted_power(int i, long k, const LevelCtx& ctx) {
  XPoly y = XPoly::var(ctx.d, i, RatFuncQ(IntPolyQ({mpz_class(1), mpz_class(-1)})));
  return twisted_power(i, k, y, ctx);
}

FullPoly twisted_power_multi(const MultiIndex& k, const LevelCtx& ctx) {
  if (k.dim() != ctx.d)
    throw std::invalid_argument("twisted_power_multi: dimension mismatch");
  FullPoly r(RatFuncQ(1), ctx.d, ctx.d);
  for (int i = 0; i < ctx.d; ++i)
    if (k[i] > 0) r *= twisted_power(i, k[i], ctx);
  return r;
}

FullPoly frobenius(const FullPoly& f, int iterations, const LevelCtx& ctx) {
  int p = static_cast<int>(ctx.p);
  std::vector<FullPoly> x_img, xi_img;
  for (int i = 0; i < ctx.d; ++i) {
    FullPoly x = x_var(ctx, i), xi = xi_var(ctx, i);
    x_img.push_back(x.pow(p));
    xi_img.push_back((xi + x).pow(p) - x.pow(p));
  }
  FullPoly r = f;
  for (int it = 0; it < iterations; ++it)
    r = subst<RatFuncQ>(
        r, [p](const RatFuncQ& c) { return c.subst_q_pow(p); }, x_img, xi_img,
        ctx.d, ctx.d);
  return r;
}

FullPoly quantum_binomial_expand(const FullPoly& a, const FullPoly& b,
                                 long k) {
  FullPoly direct(RatFuncQ(1));
  if (!a.terms().empty() || !b.terms().empty()) {
    const Mono& m = (a.terms().empty() ? b : a).terms().begin()->first;
    direct = FullPoly(RatFuncQ(1), m.x.dim(), m.xi.dim());
  }
  for (long j = 0; j < k; ++j)
    direct *= a.scaled(RatFuncQ(IntPolyQ::q_power(static_cast<int>(j)))) + b;
  FullPoly closed;
  for (long kp = 0; kp <= k; ++kp) {
    RatFuncQ c(IntPolyQ::q_power(static_cast<int>(kp * (kp - 1) / 2)));
    c *= q_binom_q(k, kp);
    closed += (a.pow(static_cast<int>(kp)) * b.pow(static_cast<int>(k - kp))).scaled(c);
  }
  if (!(direct == closed))
    throw CertError("quantum_binomial_expand: product and closed form differ");
  return direct;
}

}  // namespace qlev
