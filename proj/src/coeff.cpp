#include "qlev/coeff.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace qlev {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long i = 2; i * i <= p; ++i)
    if (p % i == 0) return false;
  return true;
}

}  // namespace

LevelCtx::LevelCtx(long p_, int m_, int d_) : p(p_), m(m_), d(d_) {
  if (!is_prime(p)) throw std::invalid_argument("LevelCtx: p must be prime");
  if (m < 0) throw std::invalid_argument("LevelCtx: m must be >= 0");
  if (d < 1) throw std::invalid_argument("LevelCtx: d must be >= 1");
}

long LevelCtx::ppow(int j) const {
  long r = 1;
  for (int i = 0; i < j; ++i) r *= p;
  return r;
}

IntPolyQ q_int(long n, int e) {
  if (n < 0) throw std::invalid_argument("q_int: n must be >= 0");
  std::vector<mpz_class> c(n > 0 ? e * (n - 1) + 1 : 0, 0);
  for (long j = 0; j < n; ++j) c[j * e] = 1;
  return IntPolyQ(std::move(c));
}

IntPolyQ q_factorial(long n, int e) {
  IntPolyQ r(1);
  for (long j = 2; j <= n; ++j) r *= q_int(j, e);
  return r;
}

namespace {

// Shared caches. Everything here is immutable once inserted; the mutex keeps
// the maps safe under concurrent sweeps.
class CoeffCache {
 public:
  static CoeffCache& get() {
    static CoeffCache c;
    return c;
  }

  const IntPolyQ& binom(long k, long kp) {
    std::lock_guard<std::mutex> lk(mu_);
    while (static_cast<long>(pascal_.size()) <= k) {
      long n = static_cast<long>(pascal_.size());
      std::vector<IntPolyQ> row(n + 1);
      row[0] = IntPolyQ(1);
      row[n] = IntPolyQ(1);
      for (long j = 1; j < n; ++j)
        row[j] = pascal_[n - 1][j - 1] + IntPolyQ::q_power(j) * pascal_[n - 1][j];
      pascal_.push_back(std::move(row));
    }
    return pascal_[k][kp];
  }

  const RatFuncQ& angle(long pm, long k, long kp, const LevelCtx& ctx) {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = angle_.find({pm, k, kp});
      if (it != angle_.end()) return it->second;
    }
    RatFuncQ v = RatFuncQ(q_binom_pascal(k, kp)) / RatFuncQ(hl_brace(k, kp, ctx));
    std::lock_guard<std::mutex> lk(mu_);
    return angle_.emplace(std::make_tuple(pm, k, kp), std::move(v))
        .first->second;
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<IntPolyQ>> pascal_;  // pascal_[k][k']
  std::map<std::tuple<long, long, long>, RatFuncQ> angle_;
};

}  // namespace

IntPolyQ q_binom_pascal(long k, long kp) {
  if (kp < 0 || kp > k || k < 0) return IntPolyQ();
  return CoeffCache::get().binom(k, kp);
}

RatFuncQ q_binom_factorial(long k, long kp) {
  if (kp < 0 || kp > k)
    throw std::invalid_argument("q_binom_factorial: need 0 <= k' <= k");
  return RatFuncQ(q_factorial(k), q_factorial(kp) * q_factorial(k - kp));
}

IntPolyQ hl_brace(long k, long kp, const LevelCtx& ctx) {
  if (kp < 0 || kp > k)
    throw std::invalid_argument("hl_brace: need 0 <= k' <= k");
  long pm = ctx.pm();
  long r = k / pm, rp = kp / pm, rpp = (k - kp) / pm;
  int e = static_cast<int>(pm);
  RatFuncQ v(q_factorial(r, e), q_factorial(rp, e) * q_factorial(rpp, e));
  if (!v.is_polynomial())
    throw CertError("hl_brace: quotient is not a polynomial (contradicts the"
                    " level-m integrality lemma)");
  return v.num();
}

LocalizedQ hl_angle(long k, long kp, const LevelCtx& ctx) {
  RatFuncQ v = hl_angle_q(k, kp, ctx);
  auto loc = in_localized(v, ctx.p);
  if (!loc)
    throw CertError("hl_angle: value is not in Z[q]_(p,q-1) (contradicts the"
                    " level-m integrality lemma)");
  return *loc;
}

RatFuncQ hl_angle_q(long k, long kp, const LevelCtx& ctx) {
  if (kp < 0 || kp > k)
    throw std::invalid_argument("hl_angle: need 0 <= k' <= k");
  return CoeffCache::get().angle(ctx.pm(), k, kp, ctx);
}

RatFuncQ q_binom_q(long k, long kp) { return RatFuncQ(q_binom_pascal(k, kp)); }

IntPolyQ q_binom_multi(const MultiIndex& k, const MultiIndex& kp) {
  if (k.dim() != kp.dim())
    throw std::invalid_argument("q_binom_multi: dimension mismatch");
  if (!leq(kp, k)) throw std::invalid_argument("q_binom_multi: need k' <= k");
  IntPolyQ r(1);
  for (int i = 0; i < k.dim(); ++i) r *= q_binom_pascal(k[i], kp[i]);
  return r;
}

IntPolyQ hl_brace_multi(const MultiIndex& k, const MultiIndex& kp,
                        const LevelCtx& ctx) {
  if (k.dim() != kp.dim())
    throw std::invalid_argument("hl_brace_multi: dimension mismatch");
  if (!leq(kp, k)) throw std::invalid_argument("hl_brace_multi: need k' <= k");
  IntPolyQ r(1);
  for (int i = 0; i < k.dim(); ++i) r *= hl_brace(k[i], kp[i], ctx);
  return r;
}

LocalizedQ hl_angle_multi(const MultiIndex& k, const MultiIndex& kp,
                          const LevelCtx& ctx) {
  RatFuncQ v = hl_angle_q_multi(k, kp, ctx);
  auto loc = in_localized(v, ctx.p);
  if (!loc) throw CertError("hl_angle_multi: not localized");
  return *loc;
}

RatFuncQ hl_angle_q_multi(const MultiIndex& k, const MultiIndex& kp,
                          const LevelCtx& ctx) {
  if (k.dim() != kp.dim())
    throw std::invalid_argument("hl_angle_multi: dimension mismatch");
  if (!leq(kp, k)) throw std::invalid_argument("hl_angle_multi: need k' <= k");
  RatFuncQ r(1);
  for (int i = 0; i < k.dim(); ++i) r *= hl_angle_q(k[i], kp[i], ctx);
  return r;
}

std::optional<LocalizedQ> in_localized(const RatFuncQ& f, long p) {
  if (!is_prime(p)) throw std::invalid_argument("in_localized: p not prime");
  mpz_class d1 = f.den().eval_one();
  if (mpz_divisible_ui_p(d1.get_mpz_t(), p)) return std::nullopt;
  return LocalizedQ{f, p};
}

bool is_unit_localized(const LocalizedQ& f) {
  mpz_class n1 = f.value.num().eval_one();
  return !mpz_divisible_ui_p(n1.get_mpz_t(), f.p);
}

LocalizedQ clmus_unit(long r, long s, const LevelCtx& ctx) {
  if (s <= 0 || s >= ctx.pm())
    throw std::invalid_argument("clmus_unit: need 0 < s < p^m");
  RatFuncQ u = RatFuncQ(q_int(ctx.pm() * r + s)) / RatFuncQ(q_int(s));
  auto loc = in_localized(u, ctx.p);
  if (!loc || !is_unit_localized(*loc))
    throw CertError("clmus_unit: (p^m r + s)_q / (s)_q is not a unit");
  return *loc;
}

mpz_class classical_brace(long k, long kp, const LevelCtx& ctx) {
  long pm = ctx.pm();
  mpz_class num, d1, d2;
  mpz_fac_ui(num.get_mpz_t(), k / pm);
  mpz_fac_ui(d1.get_mpz_t(), kp / pm);
  mpz_fac_ui(d2.get_mpz_t(), (k - kp) / pm);
  return num / (d1 * d2);
}

mpq_class classical_angle(long k, long kp, const LevelCtx& ctx) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), k, kp);
  mpq_class r(binom);
  r /= mpq_class(classical_brace(k, kp, ctx));
  r.canonicalize();
  return r;
}

}  // namespace qlev
