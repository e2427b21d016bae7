#include "qlev/dp.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qlev {

DPElem DPElem::operator-() const {
  DPElem r;
  for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

DPElem operator+(const DPElem& a, const DPElem& b) {
  DPElem r = a;
  for (auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

DPElem operator-(const DPElem& a, const DPElem& b) {
  DPElem r = a;
  for (auto& [k, c] : b.terms_) r.add_term(k, -c);
  return r;
}

DPElem DPElem::scaled(const RatFuncQ& c) const {
  DPElem r;
  if (c.is_zero()) return r;
  for (auto& [k, v] : terms_) r.add_term(k, v.scaled(c));
  return r;
}

DPElem DPElem::scaled(const XPoly& c) const {
  DPElem r;
  if (c.is_zero()) return r;
  for (auto& [k, v] : terms_) r.add_term(k, v * c);
  return r;
}

std::string DPElem::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*xi^{{" + to_string(k) + "}}";
  }
  return s;
}

TensorElem TensorElem::operator-() const {
  TensorElem r(degree_);
  for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

TensorElem operator+(const TensorElem& a, const TensorElem& b) {
  if (a.degree_ != b.degree_)
    throw std::invalid_argument("TensorElem: degree mismatch in +");
  TensorElem r = a;
  for (auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

TensorElem operator-(const TensorElem& a, const TensorElem& b) {
  if (a.degree_ != b.degree_)
    throw std::invalid_argument("TensorElem: degree mismatch in -");
  TensorElem r = a;
  for (auto& [w, c] : b.terms_) r.add_term(w, -c);
  return r;
}

TensorElem TensorElem::scaled(const RatFuncQ& c) const {
  TensorElem r(degree_);
  if (c.is_zero()) return r;
  for (auto& [w, v] : terms_) r.add_term(w, v.scaled(c));
  return r;
}

bool TensorElem::is_normalized() const {
  for (auto& [w, c] : terms_)
    for (auto& k : w)
      if (k.is_zero()) return false;
  return true;
}

std::string TensorElem::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (auto& k : w) s += " (x)' xi^{{" + to_string(k) + "}}";
  }
  return s;
}

namespace {

RatFuncQ q_minus_one_pow(int j) {
  IntPolyQ qm1(std::vector<mpz_class>{mpz_class(-1), mpz_class(1)});
  IntPolyQ r(1);
  for (int i = 0; i < j; ++i) r *= qm1;
  return RatFuncQ(r);
}

// (j)_q! / (floor(j/p^m))_{q^{p^m}}!  -- a polynomial by the cancellation
// argument attached to the multiplication rule
RatFuncQ fac_ratio(long j, const LevelCtx& ctx) {
  return RatFuncQ(q_factorial(j),
                  q_factorial(j / ctx.pm(), static_cast<int>(ctx.pm())));
}

struct BasisMulKey {
  long pm;
  std::vector<int> k, kp;
  bool operator<(const BasisMulKey& o) const {
    return std::tie(pm, k, kp) < std::tie(o.pm, o.k, o.kp);
  }
};

struct EmbedKey {
  long pm;
  std::vector<int> k;
  bool operator<(const EmbedKey& o) const {
    return std::tie(pm, k) < std::tie(o.pm, o.k);
  }
};

std::mutex g_dp_mu;
std::map<BasisMulKey, DPElem> g_basis_mul;
std::map<EmbedKey, FullPoly> g_basis_embed;

}  // namespace

const DPElem& dp_mul_basis(const MultiIndex& k, const MultiIndex& kp,
                           const LevelCtx& ctx) {
  BasisMulKey key{ctx.pm(), k.e, kp.e};
  {
    std::lock_guard<std::mutex> lk(g_dp_mu);
    auto it = g_basis_mul.find(key);
    if (it != g_basis_mul.end()) return it->second;
  }
  int d = k.dim();
  // per-coordinate expansion of the one-variable rule
  std::vector<std::vector<std::pair<int, RatFuncQ>>> parts(d);
  for (int i = 0; i < d; ++i) {
    long a = k[i], b = kp[i];
    for (long j = 0; j <= std::min(a, b); ++j) {
      RatFuncQ c = fac_ratio(j, ctx);
      c *= RatFuncQ(IntPolyQ::q_power(static_cast<int>(j * (j - 1) / 2)));
      c *= RatFuncQ(hl_brace(a + b - j, a, ctx));
      c *= q_binom_q(a, j);
      c *= hl_angle_q(b, j, ctx);
      c *= q_minus_one_pow(static_cast<int>(j));
      parts[i].emplace_back(static_cast<int>(j), c);
    }
  }
  DPElem out;
  std::vector<size_t> pick(d, 0);
  while (true) {
    MultiIndex idx = MultiIndex::zeros(d), xexp = MultiIndex::zeros(d);
    RatFuncQ c(1);
    for (int i = 0; i < d; ++i) {
      auto& [j, cj] = parts[i][pick[i]];
      idx[i] = k[i] + kp[i] - j;
      xexp[i] = j;
      c *= cj;
    }
    out.add_term(idx, XPoly::monomial(xexp, c));
    int i = 0;
    while (i < d && ++pick[i] == parts[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  std::lock_guard<std::mutex> lk(g_dp_mu);
  return g_basis_mul.emplace(std::move(key), std::move(out)).first->second;
}

DPElem dp_mul(const DPElem& a, const DPElem& b, const LevelCtx& ctx) {
  DPElem r;
  for (auto& [k, ck] : a.terms())
    for (auto& [kp, ckp] : b.terms())
      r += dp_mul_basis(k, kp, ctx).scaled(ck * ckp);
  return r;
}

const FullPoly& dp_embed_basis(const MultiIndex& k, const LevelCtx& ctx) {
  EmbedKey key{ctx.pm(), k.e};
  {
    std::lock_guard<std::mutex> lk(g_dp_mu);
    auto it = g_basis_embed.find(key);
    if (it != g_basis_embed.end()) return it->second;
  }
  FullPoly f = twisted_power_multi(k, ctx);
  RatFuncQ fac(1);
  for (int i = 0; i < k.dim(); ++i)
    fac *= RatFuncQ(q_factorial(k[i] / ctx.pm(), static_cast<int>(ctx.pm())));
  f = f.scaled(fac.inverse());
  std::lock_guard<std::mutex> lk(g_dp_mu);
  return g_basis_embed.emplace(std::move(key), std::move(f)).first->second;
}

FullPoly dp_embed(const DPElem& a, const LevelCtx& ctx) {
  FullPoly r;
  for (auto& [k, c] : a.terms())
    r += dp_embed_basis(k, ctx) * FullPoly::from_xpoly(c, ctx.d);
  return r;
}

DPElem dp_unembed(const FullPoly& f, const LevelCtx& ctx) {
  DPElem out;
  FullPoly rest = f;
  while (!rest.is_zero()) {
    // top xi-monomial determines the leading divided-power index
    const MultiIndex* top = nullptr;
    for (auto& [m, c] : rest.terms())
      if (!top || *top < m.xi) top = &m.xi;
    MultiIndex k = *top;
    XPoly c;
    for (auto& [m, v] : rest.terms())
      if (m.xi == k) c.add_term(m.x, v);
    RatFuncQ fac(1);
    for (int i = 0; i < k.dim(); ++i)
      fac *= RatFuncQ(q_factorial(k[i] / ctx.pm(), static_cast<int>(ctx.pm())));
    c = c.scaled(fac);
    out.add_term(k, c);
    rest -= dp_embed_basis(k, ctx) * FullPoly::from_xpoly(c, ctx.d);
  }
  return out;
}

DPElem taylor(const XPoly& f, const LevelCtx& ctx) {
  // x_i -> x_i + xi^{{1_i}}, extended multiplicatively
  std::vector<DPElem> gen(ctx.d);
  for (int i = 0; i < ctx.d; ++i) {
    DPElem g;
    g.add_term(MultiIndex::zeros(ctx.d), XPoly::var(ctx.d, i, RatFuncQ(1)));
    g.add_term(MultiIndex::unit(ctx.d, i), XPoly(RatFuncQ(1), ctx.d));
    gen[i] = g;
  }
  DPElem r;
  for (auto& [a, c] : f.terms()) {
    DPElem t = DPElem::one(ctx.d).scaled(c);
    for (int i = 0; i < ctx.d; ++i)
      for (int e = 0; e < a[i]; ++e) t = dp_mul(t, gen[i], ctx);
    r += t;
  }
  return r;
}

DPElem flip(const DPElem& a, const LevelCtx& ctx) {
  std::vector<FullPoly> x_img, xi_img;
  for (int i = 0; i < ctx.d; ++i) {
    x_img.push_back(x_var(ctx, i) + xi_var(ctx, i));
    xi_img.push_back(-xi_var(ctx, i));
  }
  FullPoly e =
      subst<RatFuncQ>(dp_embed(a, ctx), nullptr, x_img, xi_img, ctx.d, ctx.d);
  return dp_unembed(e, ctx);
}

DPElem dp_frobenius(const DPElem& a, const LevelCtx& ctx) {
  DPElem r = dp_unembed(frobenius(dp_embed(a, ctx), 1, ctx), ctx);
  for (auto& [k, c] : r.terms())
    for (auto& [xe, v] : c.terms())
      if (!in_localized(v, ctx.p))
        throw CertError("dp_frobenius: coefficient not localized at xi^{{" +
                        to_string(k) + "}}");
  return r;
}

TensorElem comul(const DPElem& a, const LevelCtx& ctx) {
  TensorElem t(2);
  for (auto& [k, c] : a.terms())
    for (auto& kp : multi_range(k))
      t.add_term({kp, k - kp}, c.scaled(hl_angle_q_multi(k, kp, ctx)));
  return t;
}

TensorElem face(const TensorElem& t, int i, const LevelCtx& ctx) {
  int r = t.degree();
  if (i < 0 || i > r + 1) throw std::invalid_argument("face: bad position");
  TensorElem out(r + 1);
  for (auto& [w, c] : t.terms()) {
    if (i == 0) {
      // the coefficient passes through the Taylor map; its divided-power
      // part becomes a new first factor
      DPElem th = taylor(c, ctx);
      for (auto& [j, g] : th.terms()) {
        TensorElem::Word nw;
        nw.push_back(j);
        nw.insert(nw.end(), w.begin(), w.end());
        out.add_term(nw, g);
      }
    } else if (i <= r) {
      const MultiIndex& k = w[i - 1];
      for (auto& kp : multi_range(k)) {
        TensorElem::Word nw(w.begin(), w.begin() + (i - 1));
        nw.push_back(kp);
        nw.push_back(k - kp);
        nw.insert(nw.end(), w.begin() + i, w.end());
        out.add_term(nw, c.scaled(hl_angle_q_multi(k, kp, ctx)));
      }
    } else {
      TensorElem::Word nw = w;
      nw.push_back(MultiIndex::zeros(ctx.d));
      out.add_term(nw, c);
    }
  }
  return out;
}

TensorElem degeneracy(const TensorElem& t, int i, const LevelCtx& ctx) {
  (void)ctx;
  int r = t.degree();
  if (i < 0 || i > r - 1)
    throw std::invalid_argument("degeneracy: bad position");
  // sigma^r_i merges the slots around the (i+1)-st factor, sending its xi to
  // zero; every positive divided power of that factor augments away
  TensorElem out(r - 1);
  for (auto& [w, c] : t.terms()) {
    if (!w[i].is_zero()) continue;
    TensorElem::Word nw;
    for (int j = 0; j < r; ++j)
      if (j != i) nw.push_back(w[j]);
    out.add_term(nw, c);
  }
  return out;
}

TensorElem cosimplicial_d(const TensorElem& t, bool linearized,
                          const LevelCtx& ctx) {
  int r = t.degree();
  TensorElem out(r + 1);
  if (linearized) {
    // input of tensor degree r is LP(r-1); delta_0 is omitted
    for (int i = 1; i <= r + 1; ++i) {
      TensorElem f = face(t, i, ctx);
      out = (i % 2 == 1) ? out + f : out - f;
    }
  } else {
    for (int i = 0; i <= r + 1; ++i) {
      TensorElem f = face(t, i, ctx);
      out = (i % 2 == 0) ? out + f : out - f;
    }
  }
  return out;
}

TensorElem stratification_eps(const TensorElem& t, const LevelCtx& ctx) {
  if (t.degree() != 2)
    throw std::invalid_argument("stratification_eps: degree-2 input expected");
  // output words are plain tensors, so all x-coefficients collect in front
  TensorElem out(2);
  for (auto& [w, c] : t.terms()) {
    const MultiIndex &K = w[0], &L = w[1];
    for (auto& kp : multi_range(L)) {
      RatFuncQ a = hl_angle_q_multi(L, kp, ctx);
      const DPElem& left = dp_mul_basis(K, kp, ctx);
      DPElem right = flip(DPElem::generator(L - kp), ctx);
      for (auto& [j1, g1] : left.terms())
        for (auto& [j2, g2] : right.terms())
          out.add_term({j1, j2}, (c * g1 * g2).scaled(a));
    }
  }
  return out;
}

DPElem rg_basis_change(const MultiIndex& r, const LevelCtx& ctx) {
  int e = static_cast<int>(ctx.pm());
  FullPoly prod(RatFuncQ(1), ctx.d, ctx.d);
  RatFuncQ fac(1);
  for (int i = 0; i < ctx.d; ++i) {
    if (r[i] == 0) continue;
    FullPoly base = frobenius(xi_var(ctx, i), ctx.m, ctx);
    FullPoly y = x_var(ctx, i).pow(e).scaled(
        RatFuncQ(IntPolyQ(1) - IntPolyQ::q_power(e)));
    prod *= twisted_power_of(base, r[i], y, e);
    fac *= RatFuncQ(q_factorial(r[i], e));
  }
  DPElem out = dp_unembed(prod.scaled(fac.inverse()), ctx);
  for (auto& [k, c] : out.terms())
    for (auto& [xe, v] : c.terms())
      if (!in_localized(v, ctx.p))
        throw CertError("rg_basis_change: coefficient not localized");
  return out;
}

bool clpin_check(int n, int v, const LevelCtx& ctx) {
  if (ctx.d != 1) throw std::invalid_argument("clpin_check: d = 1 only");
  long p = ctx.p;
  long pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  long pm = ctx.pm();
  long pmn = pm * pn;
  FullPoly base = frobenius(xi_var(ctx, 0), ctx.m, ctx);
  FullPoly xpm = x_var(ctx, 0).pow(static_cast<int>(pm));
  FullPoly prod(RatFuncQ(1), 1, 1);
  for (long u = 0; u < pn; ++u) {
    int exp = static_cast<int>(u * pm + v * pmn);
    RatFuncQ c(IntPolyQ(1) - IntPolyQ::q_power(exp));
    prod *= base + xpm.scaled(c);
  }
  FullPoly diff = prod - twisted_power(0, pmn, ctx);
  RatFuncQ divisor(q_int(p, static_cast<int>(pmn / p)));
  for (auto& [m, c] : diff.terms())
    if (!(c / divisor).is_polynomial()) return false;
  return true;
}

namespace {

// Slot coordinates: the variable xi^(j) is the difference of the j-th and
// (j-1)-st tensor slots. In the twisted product the j-th factor is a
// polynomial in xi^(j) over the base x + xi^(1) + .. + xi^(j-1); in the
// plain product both ends glue at slot 0, so the j-th factor lives in the
// cumulative variable xi^(1) + .. + xi^(j) over the base x.
FullPoly tensor_embed_impl(const TensorElem& t, const LevelCtx& ctx,
                           bool twisted) {
  int r = t.degree();
  int d = ctx.d, dxi = r * d;
  FullPoly out;
  for (auto& [w, c] : t.terms()) {
    FullPoly term = FullPoly::from_xpoly(c, dxi);
    std::vector<FullPoly> base(d), cum(d);
    for (int i = 0; i < d; ++i) {
      base[i] = FullPoly::x_var(d, dxi, i, RatFuncQ(1));
      cum[i] = FullPoly(RatFuncQ(0), d, dxi);
    }
    for (int j = 0; j < r; ++j) {
      for (int i = 0; i < d; ++i) {
        FullPoly xij = FullPoly::xi_var(d, dxi, j * d + i, RatFuncQ(1));
        cum[i] += xij;
        FullPoly var = twisted ? xij : cum[i];
        FullPoly bs = twisted ? base[i] + cum[i] - xij : base[i];
        FullPoly tw(RatFuncQ(1), d, dxi);
        for (int s = 0; s < w[j][i]; ++s)
          tw *= var + bs.scaled(RatFuncQ(IntPolyQ(1) - IntPolyQ::q_power(s)));
        term *= tw.scaled(RatFuncQ(q_factorial(w[j][i] / ctx.pm(),
                                               static_cast<int>(ctx.pm())))
                              .inverse());
      }
    }
    out += term;
  }
  return out;
}

}  // namespace

FullPoly tensor_embed(const TensorElem& t, const LevelCtx& ctx) {
  return tensor_embed_impl(t, ctx, true);
}

FullPoly tensor_embed_plain(const TensorElem& t, const LevelCtx& ctx) {
  return tensor_embed_impl(t, ctx, false);
}

}  // namespace qlev
