#pragma once

#include "qlev/dp.hpp"
#include "qlev/report.hpp"

namespace qlev {

// Basis word of the linearized q-jet complex in degree r:
// xi^{{k}} * (dxi)^{(f_1)_q} (x)' ... (x)' (dxi)^{(f_r)_q}
// with 0 < |f_j| <= p^m for every factor.
struct JetKey {
  MultiIndex k;
  std::vector<MultiIndex> factors;
  bool operator==(const JetKey& o) const {
    return k == o.k && factors == o.factors;
  }
  bool operator<(const JetKey& o) const {
    if (!(k == o.k)) return k < o.k;
    return factors < o.factors;
  }
};

class JetElem {
 public:
  explicit JetElem(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<JetKey, XPoly>& terms() const { return terms_; }

  // adds c * xi^{{k}} * w; words with an overflowing factor are projected to
  // zero, words with a vanishing factor are rejected
  void add_word(const MultiIndex& k, const std::vector<MultiIndex>& factors,
                const XPoly& c, long pm);

  friend JetElem operator+(const JetElem& a, const JetElem& b);
  friend JetElem operator-(const JetElem& a, const JetElem& b);
  JetElem& operator+=(const JetElem& o) { return *this = *this + o; }
  JetElem& operator-=(const JetElem& o) { return *this = *this - o; }
  JetElem scaled(const RatFuncQ& c) const;
  JetElem scaled(const XPoly& c) const;

  bool operator==(const JetElem& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const JetElem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int degree_;
  std::map<JetKey, XPoly> terms_;
};

// all factor indices 0 < |l| <= pm, graded-lex order
std::vector<MultiIndex> jet_factor_set(int d, long pm);

// differential of the linearized jet complex (Leibniz over the word)
JetElem jet_d(const JetElem& e, const LevelCtx& ctx);

// Normalized insertion of the coefficient g(x) * xi^{{J}} immediately to the
// left of factor position pos (1-based; #factors + 1 appends a trailing
// coefficient). Interior coefficients move left with the jet analogue of the
// twisted-product rule, merging (dxi)-pieces into the passed factor.
JetElem jet_place_coeff(const XPoly& c, const MultiIndex& k,
                        const std::vector<MultiIndex>& factors, int pos,
                        const XPoly& g, const MultiIndex& J,
                        const LevelCtx& ctx);

// the homotopy operator (integration of differential forms)
JetElem homotopy_h(const JetElem& e, const LevelCtx& ctx);

// projector killing the d-th variable's generators
JetElem jet_pi(const JetElem& e, const LevelCtx& ctx);

enum class JetEq { equal, not_equal, inconclusive };

// Equality in the quotient by the degree-2 relations (padded on both
// sides). The relation span is homogeneous in the x-monomial, the front
// divided-power index and the factor total, so membership splits into small
// exact linear systems; terms whose x-degree exceeds `xdeg_bound` are
// flagged inconclusive rather than decided.
JetEq jet_eq_mod_relations(const JetElem& a, const JetElem& b, int xdeg_bound,
                           const LevelCtx& ctx);

// h applied to relation contexts vanishes (well-definedness)
Report verify_h_relations(const LevelCtx& ctx);

// h d + d h = Id - pi on generator words with indices <= index_bound and
// degree <= degree_bound (free check below degree 2, relation oracle there)
Report verify_homotopy_identity(int index_bound, int degree_bound,
                                int xdeg_bound, const LevelCtx& ctx);

// truncated resolution check for d = 1: homology of
// A -> LOmega(0) -> LOmega(1) concentrated in degree 0
Report verify_qjfp_truncation(int bound, const LevelCtx& ctx);

}  // namespace qlev
