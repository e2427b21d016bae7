#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qlev {

// Dense polynomial in the formal variable q with arbitrary-precision integer
// coefficients. The zero polynomial stores no coefficients; otherwise the
// top coefficient is nonzero. All arithmetic is exact.
class IntPolyQ {
 public:
  IntPolyQ() = default;
  IntPolyQ(long c);
  IntPolyQ(const mpz_class& c);
  explicit IntPolyQ(std::vector<mpz_class> coeffs);

  // scale * q^e
  static IntPolyQ q_power(int e, const mpz_class& scale = 1);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& coeff(int i) const;
  const mpz_class& leading() const;

  IntPolyQ operator-() const;
  IntPolyQ& operator+=(const IntPolyQ& o);
  IntPolyQ& operator-=(const IntPolyQ& o);
  friend IntPolyQ operator+(IntPolyQ a, const IntPolyQ& b) { return a += b; }
  friend IntPolyQ operator-(IntPolyQ a, const IntPolyQ& b) { return a -= b; }
  friend IntPolyQ operator*(const IntPolyQ& a, const IntPolyQ& b);
  IntPolyQ& operator*=(const IntPolyQ& o) { return *this = *this * o; }

  bool operator==(const IntPolyQ& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPolyQ& o) const { return coeffs_ != o.coeffs_; }
  // arbitrary stable order, for use as a map key
  bool operator<(const IntPolyQ& o) const { return coeffs_ < o.coeffs_; }

  mpz_class content() const;  // gcd of coefficients, >= 0; 0 for zero
  IntPolyQ primitive_part() const;
  mpz_class eval_one() const;  // value at q = 1
  IntPolyQ subst_q_pow(int e) const;  // q -> q^e, e >= 1

  // Quotient when rhs divides exactly over Z[q]; nullopt otherwise.
  std::optional<IntPolyQ> divide_exact(const IntPolyQ& rhs) const;

  // gcd over Z[q] (content included), normalized to positive leading coeff
  friend IntPolyQ gcd_poly(const IntPolyQ& a, const IntPolyQ& b);

  std::string str() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

}  // namespace qlev
