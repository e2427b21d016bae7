#pragma once

#include "qlev/coeff.hpp"
#include "qlev/ratfunc.hpp"
#include "qlev/xpoly.hpp"

namespace qlev {

using XPoly = XPolyT<RatFuncQ>;
using FullPoly = FullPolyT<RatFuncQ>;

// the scalar q as a rational function
inline RatFuncQ q_scalar(int e = 1) { return RatFuncQ(IntPolyQ::q_power(e)); }

inline FullPoly x_var(const LevelCtx& ctx, int i) {
  return FullPoly::x_var(ctx.d, ctx.d, i, RatFuncQ(1));
}
inline FullPoly xi_var(const LevelCtx& ctx, int i) {
  return FullPoly::xi_var(ctx.d, ctx.d, i, RatFuncQ(1));
}

// prod_{j=0}^{k-1} (base + (j)_{q^e} * y)
FullPoly twisted_power_of(const FullPoly& base, long k, const FullPoly& y,
                          int e = 1);

// xi_i^{(k)_{q,y}}; the default twist is y = (1-q) x_i
FullPoly twisted_power(int i, long k, const XPoly& y, const LevelCtx& ctx);
FullPoly twisted_power(int i, long k, const LevelCtx& ctx);
FullPoly twisted_power_multi(const MultiIndex& k, const LevelCtx& ctx);

// m-fold Frobenius lift: q -> q^p, x_i -> x_i^p, xi_i -> (xi_i+x_i)^p - x_i^p
FullPoly frobenius(const FullPoly& f, int iterations, const LevelCtx& ctx);

// prod_{j=0}^{k-1} (q^j a + b); also evaluated through the closed binomial
// sum, with the two results checked against each other.
FullPoly quantum_binomial_expand(const FullPoly& a, const FullPoly& b, long k);

}  // namespace qlev
