#include "qlev/ratfunc.hpp"

#include <stdexcept>

namespace qlev {

RatFuncQ::RatFuncQ(IntPolyQ num, IntPolyQ den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFuncQ: zero denominator");
  reduce();
}

void RatFuncQ::reduce() {
  if (num_.is_zero()) {
    den_ = IntPolyQ(1);
    return;
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_.is_one()) return;
  // fast path: exact division settles most certified quotients
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = IntPolyQ(1);
    return;
  }
  IntPolyQ g = gcd_poly(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFuncQ RatFuncQ::operator-() const {
  RatFuncQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFuncQ(a.num_ + b.num_, a.den_);
  IntPolyQ g = gcd_poly(a.den_, b.den_);
  if (g.is_one()) return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  IntPolyQ da = *a.den_.divide_exact(g);
  IntPolyQ db = *b.den_.divide_exact(g);
  return RatFuncQ(a.num_ * db + b.num_ * da, da * b.den_);
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.is_zero() || b.is_zero()) return RatFuncQ();
  // cross-cancel first to keep intermediate sizes down
  IntPolyQ g1 = gcd_poly(a.num_, b.den_);
  IntPolyQ g2 = gcd_poly(b.num_, a.den_);
  IntPolyQ n1 = g1.is_one() ? a.num_ : *a.num_.divide_exact(g1);
  IntPolyQ d2 = g1.is_one() ? b.den_ : *b.den_.divide_exact(g1);
  IntPolyQ n2 = g2.is_one() ? b.num_ : *b.num_.divide_exact(g2);
  IntPolyQ d1 = g2.is_one() ? a.den_ : *a.den_.divide_exact(g2);
  return RatFuncQ(n1 * n2, d1 * d2);
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
  return a * b.inverse();
}

RatFuncQ RatFuncQ::inverse() const {
  if (is_zero()) throw std::invalid_argument("RatFuncQ: inverse of zero");
  return RatFuncQ(den_, num_);
}

RatFuncQ RatFuncQ::subst_q_pow(int e) const {
  // substitution preserves coprimality over Q, so no re-reduction is needed
  RatFuncQ r;
  r.num_ = num_.subst_q_pow(e);
  r.den_ = den_.subst_q_pow(e);
  return r;
}

std::string RatFuncQ::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qlev
