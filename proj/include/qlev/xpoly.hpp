#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "qlev/multiindex.hpp"

namespace qlev {

// Sparse polynomial in x_1..x_d with coefficients in a commutative ring R.
// Terms are keyed by exponent multi-index in graded-lex order; no zero
// coefficients are stored.
template <class R>
class XPolyT {
 public:
  XPolyT() = default;
  explicit XPolyT(const R& c, int d = 0) {
    if (!c.is_zero()) terms_.emplace(MultiIndex::zeros(d), c);
  }

  static XPolyT monomial(const MultiIndex& a, const R& c) {
    XPolyT r;
    if (!c.is_zero()) terms_of(r).emplace(a, c);
    return r;
  }
  static XPolyT var(int d, int i, const R& c) {
    return monomial(MultiIndex::unit(d, i), c);
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, R>& terms() const { return terms_; }
  int max_total_degree() const {
    int m = 0;
    for (auto& [a, c] : terms_) m = std::max(m, a.total());
    return m;
  }

  void add_term(const MultiIndex& a, const R& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(a, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  XPolyT operator-() const {
    XPolyT r;
    for (auto& [a, c] : terms_) terms_of(r).emplace(a, -c);
    return r;
  }
  friend XPolyT operator+(const XPolyT& a, const XPolyT& b) {
    XPolyT r = a;
    for (auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }
  friend XPolyT operator-(const XPolyT& a, const XPolyT& b) {
    XPolyT r = a;
    for (auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
  }
  friend XPolyT operator*(const XPolyT& a, const XPolyT& b) {
    XPolyT r;
    for (auto& [ka, ca] : a.terms_)
      for (auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  XPolyT scaled(const R& c) const {
    XPolyT r;
    if (c.is_zero()) return r;
    for (auto& [a, v] : terms_) r.add_term(a, v * c);
    return r;
  }
  XPolyT& operator+=(const XPolyT& o) { return *this = *this + o; }
  XPolyT& operator-=(const XPolyT& o) { return *this = *this - o; }
  XPolyT& operator*=(const XPolyT& o) { return *this = *this * o; }

  bool operator==(const XPolyT& o) const { return terms_ == o.terms_; }
  bool operator!=(const XPolyT& o) const { return !(*this == o); }
  bool operator<(const XPolyT& o) const { return terms_ < o.terms_; }

  template <class F>
  auto map_coeffs(F f) const {
    XPolyT<decltype(f(R()))> r;
    for (auto& [a, c] : terms_) r.add_term(a, f(c));
    return r;
  }

  std::string str(const std::string& vname = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (auto& [a, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      for (int i = 0; i < a.dim(); ++i) {
        if (a[i] == 0) continue;
        s += "*" + vname + std::to_string(i + 1);
        if (a[i] > 1) s += "^" + std::to_string(a[i]);
      }
    }
    return s;
  }

 private:
  static std::map<MultiIndex, R>& terms_of(XPolyT& p) { return p.terms_; }
  std::map<MultiIndex, R> terms_;
};

// Monomial in the variables x_1..x_d, xi_1..xi_e (the xi block may have a
// different length than the x block, e.g. for several tensor copies).
struct Mono {
  MultiIndex x, xi;
  int total() const { return x.total() + xi.total(); }
  bool operator==(const Mono& o) const { return x == o.x && xi == o.xi; }
  bool operator<(const Mono& o) const {
    int ta = total(), tb = o.total();
    if (ta != tb) return ta < tb;
    if (!(xi == o.xi)) return xi < o.xi;
    return x < o.x;
  }
  // Pads to the larger block on each side, so a dimensionless unit monomial
  // acts neutrally under multiplication.
  Mono operator+(const Mono& o) const {
    auto pad_add = [](const MultiIndex& a, const MultiIndex& b) {
      const MultiIndex& lo = a.dim() <= b.dim() ? a : b;
      MultiIndex r = a.dim() <= b.dim() ? b : a;
      for (int i = 0; i < lo.dim(); ++i) r[i] += lo[i];
      return r;
    };
    return Mono{pad_add(x, o.x), pad_add(xi, o.xi)};
  }
};

// Sparse polynomial in the x and xi blocks together.
template <class R>
class FullPolyT {
 public:
  FullPolyT() = default;
  explicit FullPolyT(const R& c, int dx = 0, int dxi = 0) {
    if (!c.is_zero())
      terms_.emplace(Mono{MultiIndex::zeros(dx), MultiIndex::zeros(dxi)}, c);
  }

  static FullPolyT monomial(const Mono& m, const R& c) {
    FullPolyT r;
    if (!c.is_zero()) r.terms_.emplace(m, c);
    return r;
  }
  static FullPolyT x_var(int dx, int dxi, int i, const R& c) {
    return monomial(Mono{MultiIndex::unit(dx, i), MultiIndex::zeros(dxi)}, c);
  }
  static FullPolyT xi_var(int dx, int dxi, int i, const R& c) {
    return monomial(Mono{MultiIndex::zeros(dx), MultiIndex::unit(dxi, i)}, c);
  }
  static FullPolyT from_xpoly(const XPolyT<R>& p, int dxi) {
    FullPolyT r;
    for (auto& [a, c] : p.terms())
      r.terms_.emplace(Mono{a, MultiIndex::zeros(dxi)}, c);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, R>& terms() const { return terms_; }

  void add_term(const Mono& m, const R& c) {
    if (c.is_zero()) return;
    if (!terms_.empty()) {
      const Mono& first = terms_.begin()->first;
      if (first.x.dim() != m.x.dim() || first.xi.dim() != m.xi.dim())
        throw std::invalid_argument("FullPoly: mixed block dimensions");
    }
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FullPolyT operator-() const {
    FullPolyT r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend FullPolyT operator+(const FullPolyT& a, const FullPolyT& b) {
    FullPolyT r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend FullPolyT operator-(const FullPolyT& a, const FullPolyT& b) {
    FullPolyT r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend FullPolyT operator*(const FullPolyT& a, const FullPolyT& b) {
    FullPolyT r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
  }
  FullPolyT scaled(const R& c) const {
    FullPolyT r;
    if (c.is_zero()) return r;
    for (auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
  }
  FullPolyT& operator+=(const FullPolyT& o) { return *this = *this + o; }
  FullPolyT& operator-=(const FullPolyT& o) { return *this = *this - o; }
  FullPolyT& operator*=(const FullPolyT& o) { return *this = *this * o; }

  FullPolyT pow(int n) const {
    FullPolyT r(R(1));
    if (!terms_.empty()) {
      // keep block dimensions on the unit term
      const Mono& any = terms_.begin()->first;
      r = FullPolyT(R(1), any.x.dim(), any.xi.dim());
    }
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  bool operator==(const FullPolyT& o) const { return terms_ == o.terms_; }
  bool operator!=(const FullPolyT& o) const { return !(*this == o); }

  template <class F>
  FullPolyT map_coeffs(F f) const {
    FullPolyT r;
    for (auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      for (int i = 0; i < m.x.dim(); ++i) {
        if (m.x[i] == 0) continue;
        s += "*x" + std::to_string(i + 1);
        if (m.x[i] > 1) s += "^" + std::to_string(m.x[i]);
      }
      for (int i = 0; i < m.xi.dim(); ++i) {
        if (m.xi[i] == 0) continue;
        s += "*xi" + std::to_string(i + 1);
        if (m.xi[i] > 1) s += "^" + std::to_string(m.xi[i]);
      }
    }
    return s;
  }

 private:
  std::map<Mono, R> terms_;
};

// Ring-map substitution: coefficients through `coeff_map`, x_i and xi_i to
// the supplied images (which fix the output block dimensions).
template <class R>
FullPolyT<R> subst(const FullPolyT<R>& f,
                   const std::function<R(const R&)>& coeff_map,
                   const std::vector<FullPolyT<R>>& x_img,
                   const std::vector<FullPolyT<R>>& xi_img, int out_dx,
                   int out_dxi) {
  FullPolyT<R> r;
  for (auto& [m, c] : f.terms()) {
    if (m.x.dim() > static_cast<int>(x_img.size()) ||
        m.xi.dim() > static_cast<int>(xi_img.size()))
      throw std::invalid_argument("subst: missing variable image");
    FullPolyT<R> t(coeff_map ? coeff_map(c) : c, out_dx, out_dxi);
    for (int i = 0; i < m.x.dim(); ++i)
      if (m.x[i] > 0) t *= x_img[i].pow(m.x[i]);
    for (int i = 0; i < m.xi.dim(); ++i)
      if (m.xi[i] > 0) t *= xi_img[i].pow(m.xi[i]);
    r += t;
  }
  return r;
}

}  // namespace qlev
