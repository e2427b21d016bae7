#pragma once

#include <optional>
#include <stdexcept>

#include "qlev/intpoly.hpp"
#include "qlev/multiindex.hpp"
#include "qlev/ratfunc.hpp"

namespace qlev {

// Context for the level-m theory: a fixed prime p, level m >= 0 and number
// of coordinates d >= 1.
struct LevelCtx {
  long p = 2;
  int m = 1;
  int d = 1;

  LevelCtx() = default;
  LevelCtx(long p_, int m_, int d_);

  long ppow(int j) const;  // p^j
  long pm() const { return ppow(m); }
};

// Raised when an integrality or unit certification fails; such a failure
// would contradict a proved statement, so it is never silently swallowed.
struct CertError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of the localization Z[q]_(p, q-1): a reduced fraction whose
// denominator at q = 1 is a unit mod p.
struct LocalizedQ {
  RatFuncQ value;
  long p = 0;
};

// (n)_{q^e} = 1 + q^e + ... + q^{e(n-1)}
IntPolyQ q_int(long n, int e = 1);
// (n)_{q^e}!
IntPolyQ q_factorial(long n, int e = 1);

// q-binomial via the Pascal recurrence; 0 when k' > k or k' < 0.
IntPolyQ q_binom_pascal(long k, long kp);
// (k)_q! / ((k')_q! (k-k')_q!) over Q(q); requires k' <= k.
RatFuncQ q_binom_factorial(long k, long kp);

// {k \ k'}_(m),q: the q^{p^m}-factorial quotient of the integer parts,
// certified to be a polynomial in Z[q].
IntPolyQ hl_brace(long k, long kp, const LevelCtx& ctx);
// <k \ k'>_(m),q = (k \ k')_q / {k \ k'}_(m),q, certified localized at p.
LocalizedQ hl_angle(long k, long kp, const LevelCtx& ctx);

IntPolyQ q_binom_multi(const MultiIndex& k, const MultiIndex& kp);
IntPolyQ hl_brace_multi(const MultiIndex& k, const MultiIndex& kp,
                        const LevelCtx& ctx);
LocalizedQ hl_angle_multi(const MultiIndex& k, const MultiIndex& kp,
                          const LevelCtx& ctx);

// Membership test for Z[q]_(p, q-1): a reduced fraction lies in the
// localization iff its denominator at q = 1 is not divisible by p.
std::optional<LocalizedQ> in_localized(const RatFuncQ& f, long p);
bool is_unit_localized(const LocalizedQ& f);

// The unit u with (p^m r + s)_q = u * (s)_q, for 0 < s < p^m.
LocalizedQ clmus_unit(long r, long s, const LevelCtx& ctx);

// Uncertified angle coefficient as a plain fraction (cached); the workhorse
// for the algebra modules.
RatFuncQ hl_angle_q(long k, long kp, const LevelCtx& ctx);
RatFuncQ hl_angle_q_multi(const MultiIndex& k, const MultiIndex& kp,
                          const LevelCtx& ctx);
// Cached Pascal binomial as a RatFuncQ.
RatFuncQ q_binom_q(long k, long kp);

// Classical values at q = 1 (exact rational arithmetic), for cross-checks.
mpz_class classical_brace(long k, long kp, const LevelCtx& ctx);
mpq_class classical_angle(long k, long kp, const LevelCtx& ctx);

}  // namespace qlev
