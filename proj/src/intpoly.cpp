#include "qlev/intpoly.hpp"

#include <stdexcept>

namespace qlev {

namespace {
const mpz_class kZero = 0;
}

IntPolyQ::IntPolyQ(long c) {
  if (c != 0) coeffs_.push_back(mpz_class(c));
}

IntPolyQ::IntPolyQ(const mpz_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

IntPolyQ::IntPolyQ(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolyQ IntPolyQ::q_power(int e, const mpz_class& scale) {
  IntPolyQ r;
  if (scale == 0) return r;
  r.coeffs_.assign(e + 1, 0);
  r.coeffs_[e] = scale;
  return r;
}

void IntPolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

const mpz_class& IntPolyQ::leading() const {
  if (is_zero()) return kZero;
  return coeffs_.back();
}

IntPolyQ IntPolyQ::operator-() const {
  IntPolyQ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolyQ& IntPolyQ::operator+=(const IntPolyQ& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolyQ& IntPolyQ::operator-=(const IntPolyQ& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolyQ operator*(const IntPolyQ& a, const IntPolyQ& b) {
  IntPolyQ r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

mpz_class IntPolyQ::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolyQ IntPolyQ::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (leading() < 0) g = -g;
  IntPolyQ r = *this;
  for (auto& c : r.coeffs_) c /= g;
  return r;
}

mpz_class IntPolyQ::eval_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

IntPolyQ IntPolyQ::subst_q_pow(int e) const {
  if (e < 1) throw std::invalid_argument("subst_q_pow: e must be >= 1");
  if (is_zero() || e == 1) return *this;
  IntPolyQ r;
  r.coeffs_.assign(static_cast<size_t>(degree()) * e + 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * e] = coeffs_[i];
  return r;
}

std::optional<IntPolyQ> IntPolyQ::divide_exact(const IntPolyQ& rhs) const {
  if (rhs.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (is_zero()) return IntPolyQ();
  if (degree() < rhs.degree()) return std::nullopt;
  std::vector<mpz_class> rem = coeffs_;
  std::vector<mpz_class> quo(coeffs_.size() - rhs.coeffs_.size() + 1, 0);
  const mpz_class& lb = rhs.leading();
  for (int i = static_cast<int>(rem.size()) - 1;
       i >= rhs.degree(); --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lb.get_mpz_t()))
      return std::nullopt;
    mpz_class f = rem[i] / lb;
    quo[i - rhs.degree()] = f;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      mpz_submul(rem[i - rhs.degree() + j].get_mpz_t(), f.get_mpz_t(),
                 rhs.coeffs_[j].get_mpz_t());
  }
  for (int i = 0; i < rhs.degree(); ++i)
    if (rem[i] != 0) return std::nullopt;
  return IntPolyQ(std::move(quo));
}

namespace {

// Pseudo-remainder of primitive parts, used by the primitive PRS below.
IntPolyQ pseudo_rem(const IntPolyQ& a, const IntPolyQ& b) {
  std::vector<mpz_class> rem(a.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) rem[i] = a.coeff(i);
  int db = b.degree();
  const mpz_class lb = b.leading();
  int i = static_cast<int>(rem.size()) - 1;
  while (i >= db) {
    if (rem[i] != 0) {
      mpz_class f = rem[i];
      for (int j = 0; j < i; ++j) rem[j] *= lb;
      for (int j = 0; j < db; ++j)
        mpz_submul(rem[i - db + j].get_mpz_t(), f.get_mpz_t(),
                   b.coeff(j).get_mpz_t());
      rem[i] = 0;
    }
    --i;
  }
  rem.resize(db);
  return IntPolyQ(std::move(rem));
}

}  // namespace

IntPolyQ gcd_poly(const IntPolyQ& a, const IntPolyQ& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPolyQ A = a.primitive_part();
  IntPolyQ B = b.primitive_part();
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    IntPolyQ R = pseudo_rem(A, B).primitive_part();
    A = std::move(B);
    B = std::move(R);
  }
  return A.primitive_part() * cg;
}

std::string IntPolyQ::str() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class ac = abs(c);
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += (c < 0) ? "-" : "+";
    }
    bool unit = (ac == 1);
    if (i == 0) {
      s += ac.get_str();
    } else {
      if (!unit) {
        s += ac.get_str();
        s += "*";
      }
      s += (i == 1) ? "q" : "q^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace qlev
