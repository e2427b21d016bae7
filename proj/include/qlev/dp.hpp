#pragma once

#include "qlev/poly_ops.hpp"

namespace qlev {

// Element of the m-q-PD polynomial algebra A<xi>_(m),q,x over A = R[x]:
// a finitely supported sum  sum_k c_k(x) * xi^{{k}}  with coefficients in
// the ambient field Q(q).
class DPElem {
 public:
  DPElem() = default;
  explicit DPElem(const XPoly& c, int d) {
    add_term(MultiIndex::zeros(d), c);
  }

  static DPElem generator(const MultiIndex& k) {
    DPElem r;
    r.add_term(k, XPoly(RatFuncQ(1), k.dim()));
    return r;
  }
  static DPElem one(int d) { return DPElem(XPoly(RatFuncQ(1), d), d); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, XPoly>& terms() const { return terms_; }
  XPoly coeff(const MultiIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? XPoly() : it->second;
  }

  void add_term(const MultiIndex& k, const XPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  DPElem operator-() const;
  friend DPElem operator+(const DPElem& a, const DPElem& b);
  friend DPElem operator-(const DPElem& a, const DPElem& b);
  DPElem& operator+=(const DPElem& o) { return *this = *this + o; }
  DPElem& operator-=(const DPElem& o) { return *this = *this - o; }
  DPElem scaled(const RatFuncQ& c) const;
  DPElem scaled(const XPoly& c) const;

  bool operator==(const DPElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const DPElem& o) const { return !(*this == o); }

  // augmentation: xi^{{k}} -> 0 for k != 0
  XPoly augment() const {
    XPoly r;
    for (auto& [k, c] : terms_)
      if (k.is_zero()) r += c;
    return r;
  }

  std::string str() const;

 private:
  std::map<MultiIndex, XPoly> terms_;
};

// Element of P^(m)(r), the r-fold twisted tensor power of the m-q-PD algebra
// over A, in the canonical form  sum c(x) * xi^{{k_1}} (x)' ... (x)' xi^{{k_r}}
// with all A-coefficients on the front. Degree 0 elements are plain XPoly.
class TensorElem {
 public:
  using Word = std::vector<MultiIndex>;

  explicit TensorElem(int degree = 0) : degree_(degree) {}

  static TensorElem from_dp(const DPElem& a) {
    TensorElem t(1);
    for (auto& [k, c] : a.terms()) t.add_term({k}, c);
    return t;
  }
  static TensorElem scalar(const XPoly& c) {
    TensorElem t(0);
    t.add_term({}, c);
    return t;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, XPoly>& terms() const { return terms_; }

  void add_term(const Word& w, const XPoly& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(w.size()) != degree_)
      throw std::invalid_argument("TensorElem: word length != degree");
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorElem operator-() const;
  friend TensorElem operator+(const TensorElem& a, const TensorElem& b);
  friend TensorElem operator-(const TensorElem& a, const TensorElem& b);
  TensorElem& operator+=(const TensorElem& o) { return *this = *this + o; }
  TensorElem& operator-=(const TensorElem& o) { return *this = *this - o; }
  TensorElem scaled(const RatFuncQ& c) const;

  bool operator==(const TensorElem& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const TensorElem& o) const { return !(*this == o); }

  // true if every factor of every word is nonzero (lies in NP / LNP)
  bool is_normalized() const;

  std::string str() const;

 private:
  int degree_;
  std::map<Word, XPoly> terms_;
};

// --- m-q-PD algebra operations ---

DPElem dp_mul(const DPElem& a, const DPElem& b, const LevelCtx& ctx);
// product of basis generators, cached
const DPElem& dp_mul_basis(const MultiIndex& k, const MultiIndex& kp,
                           const LevelCtx& ctx);

FullPoly dp_embed(const DPElem& a, const LevelCtx& ctx);
const FullPoly& dp_embed_basis(const MultiIndex& k, const LevelCtx& ctx);
DPElem dp_unembed(const FullPoly& f, const LevelCtx& ctx);

// q-Taylor map of level m: x_i -> x_i + xi^{{1_i}}, extended multiplicatively
DPElem taylor(const XPoly& f, const LevelCtx& ctx);

// flip: x_i -> x_i + xi_i, xi_i -> -xi_i through the embedding
DPElem flip(const DPElem& a, const LevelCtx& ctx);

// Frobenius on the algebra; all output coefficients must certify localized
DPElem dp_frobenius(const DPElem& a, const LevelCtx& ctx);

// comultiplication delta^1_1
TensorElem comul(const DPElem& a, const LevelCtx& ctx);

// coface delta^r_i, 0 <= i <= r+1, on a degree-r element
TensorElem face(const TensorElem& t, int i, const LevelCtx& ctx);
// codegeneracy sigma^r_i, 0 <= i <= r-1
TensorElem degeneracy(const TensorElem& t, int i, const LevelCtx& ctx);

// alternating sums of cofaces; `linearized` treats the input (of tensor
// degree r+1) as LP(r), whose differential omits delta_0
TensorElem cosimplicial_d(const TensorElem& t, bool linearized,
                          const LevelCtx& ctx);

// hyper stratification on A<xi>: degree-2 (x)' input to degree-2 plain-(x)
// output with flip on the right factor
TensorElem stratification_eps(const TensorElem& t, const LevelCtx& ctx);

// (phi^m(xi))^{[r]} expressed in the xi^{{k}} basis; coefficients certified
DPElem rg_basis_change(const MultiIndex& r, const LevelCtx& ctx);

// divisibility by (p)_{q^{p^{m+n-1}}} of the twisted-power defect (d = 1)
bool clpin_check(int n, int v, const LevelCtx& ctx);

// Embedding of tensor words into the polynomial ring with degree-many xi
// blocks; the j-th factor is twisted over the base x + xi^(1) + .. + xi^(j-1).
FullPoly tensor_embed(const TensorElem& t, const LevelCtx& ctx);
// plain-(x) variant: every factor twisted over the base x
FullPoly tensor_embed_plain(const TensorElem& t, const LevelCtx& ctx);

}  // namespace qlev
