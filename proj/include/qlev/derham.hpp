#pragma once

#include "qlev/dp.hpp"
#include "qlev/report.hpp"

namespace qlev {

// Basis label of the (linearized) higher q-de Rham complex in degree r:
// xi^{{k}} (x)' xibar_{i_1} /\' ... /\' xibar_{i_r} with S = {i_1 < ... < i_r}.
struct DeRhamKey {
  MultiIndex k;
  std::vector<int> s;  // strictly increasing, 0-based variable indices
  bool operator==(const DeRhamKey& o) const { return k == o.k && s == o.s; }
  bool operator<(const DeRhamKey& o) const {
    if (!(k == o.k)) return k < o.k;
    return s < o.s;
  }
};

class DeRhamElem {
 public:
  explicit DeRhamElem(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<DeRhamKey, XPoly>& terms() const { return terms_; }

  void add_term(const DeRhamKey& key, const XPoly& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(key.s.size()) != degree_)
      throw std::invalid_argument("DeRhamElem: wedge length != degree");
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend DeRhamElem operator+(const DeRhamElem& a, const DeRhamElem& b);
  friend DeRhamElem operator-(const DeRhamElem& a, const DeRhamElem& b);
  DeRhamElem& operator+=(const DeRhamElem& o) { return *this = *this + o; }

  bool operator==(const DeRhamElem& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const DeRhamElem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int degree_;
  std::map<DeRhamKey, XPoly> terms_;
};

// Direct sum of p^{md} copies of A, indexed by the box 0 <= k_i < p^m.
class CopiesElem {
 public:
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, XPoly>& terms() const { return terms_; }

  void add_term(const MultiIndex& k, const XPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend CopiesElem operator+(const CopiesElem& a, const CopiesElem& b);
  friend CopiesElem operator-(const CopiesElem& a, const CopiesElem& b);
  CopiesElem& operator+=(const CopiesElem& o) { return *this = *this + o; }

  bool operator==(const CopiesElem& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  std::map<MultiIndex, XPoly> terms_;
};

// Quotient map onto the de Rham complex. `linearized` reads the first
// factor of the word as the divided-power coefficient; otherwise the whole
// word consists of form factors and the coefficient index is 0. Rejects
// non-normalized input.
DeRhamElem derham_reduce(const TensorElem& t, bool linearized,
                         const LevelCtx& ctx);

// d(xi^{{k}} (x)' w) = sum_{k_i >= p^m} <k_i \ p^m> xi^{{k - p^m 1_i}} (x)'
//                      xibar_i /\' w
DeRhamElem derham_d(const DeRhamElem& e, const LevelCtx& ctx);

CopiesElem beta(const CopiesElem& e, const LevelCtx& ctx);
CopiesElem beta_inverse(const CopiesElem& e, const LevelCtx& ctx);

// iota' (e_k -> xi^{{k}}) and iota = iota' o beta^{-1}
DeRhamElem iota_prime(const CopiesElem& e, const LevelCtx& ctx);
DeRhamElem iota(const CopiesElem& e, const LevelCtx& ctx);

// exactness of the truncated linearized complex, by weight-slice ranks
Report verify_poincare(int bound, const LevelCtx& ctx);

}  // namespace qlev
