#pragma once

#include "qlev/intpoly.hpp"

namespace qlev {

// Reduced fraction of integer q-polynomials, the ambient field Q(q) for all
// intermediate computations. Canonical form: gcd(num, den) = 1 over Z[q]
// (integer content included) and the denominator has positive leading
// coefficient, so equality is componentwise.
class RatFuncQ {
 public:
  RatFuncQ() : num_(), den_(1) {}
  RatFuncQ(long c) : num_(c), den_(1) {}
  RatFuncQ(const mpz_class& c) : num_(c), den_(1) {}
  RatFuncQ(IntPolyQ p) : num_(std::move(p)), den_(1) {}
  RatFuncQ(IntPolyQ num, IntPolyQ den);

  const IntPolyQ& num() const { return num_; }
  const IntPolyQ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFuncQ operator-() const;
  friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
  RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
  RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
  RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
  RatFuncQ& operator/=(const RatFuncQ& o) { return *this = *this / o; }
  RatFuncQ inverse() const;

  bool operator==(const RatFuncQ& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFuncQ& o) const { return !(*this == o); }
  bool operator<(const RatFuncQ& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
  }

  RatFuncQ subst_q_pow(int e) const;

  std::string str() const;

 private:
  void reduce();
  IntPolyQ num_, den_;
};

}  // namespace qlev
