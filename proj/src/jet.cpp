#include "qlev/jet.hpp"

#include <chrono>
#include <functional>

#include "qlev/linalg.hpp"

namespace qlev {

void JetElem::add_word(const MultiIndex& k,
                       const std::vector<MultiIndex>& factors, const XPoly& c,
                       long pm) {
  if (c.is_zero()) return;
  if (static_cast<int>(factors.size()) != degree_)
    throw std::invalid_argument("JetElem: word length != degree");
  for (auto& f : factors) {
    if (f.is_zero())
      throw std::invalid_argument("JetElem: zero factor in a word");
    if (f.total() > pm) return;  // projected away in the jet quotient
  }
  JetKey key{k, factors};
  auto [it, fresh] = terms_.emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

JetElem operator+(const JetElem& a, const JetElem& b) {
  if (a.degree_ != b.degree_)
    throw std::invalid_argument("JetElem: degree mismatch in +");
  JetElem r = a;
  for (auto& [key, c] : b.terms_) {
    auto [it, fresh] = r.terms_.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

JetElem operator-(const JetElem& a, const JetElem& b) {
  return a + b.scaled(RatFuncQ(-1));
}

JetElem JetElem::scaled(const RatFuncQ& c) const {
  JetElem r(degree_);
  if (c.is_zero()) return r;
  for (auto& [key, v] : terms_) r.terms_.emplace(key, v.scaled(c));
  return r;
}

JetElem JetElem::scaled(const XPoly& c) const {
  JetElem r(degree_);
  if (c.is_zero()) return r;
  for (auto& [key, v] : terms_) {
    XPoly w = v * c;
    if (!w.is_zero()) r.terms_.emplace(key, std::move(w));
  }
  return r;
}

std::string JetElem::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto& [key, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*xi^{{" + to_string(key.k) + "}}";
    for (auto& f : key.factors) s += " (x)' dxi^{(" + to_string(f) + ")}";
  }
  return s;
}

std::vector<MultiIndex> jet_factor_set(int d, long pm) {
  std::vector<MultiIndex> out;
  for (int t = 1; t <= pm; ++t)
    for (auto& k : multi_of_total(d, t)) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

JetElem jet_d(const JetElem& e, const LevelCtx& ctx) {
  long pm = ctx.pm();
  JetElem out(e.degree() + 1);
  for (auto& [key, c] : e.terms()) {
    // d^0 on the coefficient: a new leading factor
    for (auto& kp : multi_range(key.k)) {
      if (kp.is_zero() || kp.total() > pm) continue;
      std::vector<MultiIndex> f;
      f.reserve(key.factors.size() + 1);
      f.push_back(kp);
      f.insert(f.end(), key.factors.begin(), key.factors.end());
      out.add_word(key.k - kp, f, c.scaled(hl_angle_q_multi(key.k, kp, ctx)),
                   pm);
    }
    // Leibniz over the factors with d^1
    for (size_t j = 0; j < key.factors.size(); ++j) {
      const MultiIndex& z = key.factors[j];
      for (auto& lp : multi_range(z)) {
        if (lp.is_zero() || lp == z) continue;
        RatFuncQ s = hl_angle_q_multi(z, lp, ctx);
        if (j % 2 == 0) s = -s;  // (-1)^{j+1} overall
        std::vector<MultiIndex> f(key.factors.begin(),
                                  key.factors.begin() + j);
        f.push_back(z - lp);
        f.push_back(lp);
        f.insert(f.end(), key.factors.begin() + j + 1, key.factors.end());
        out.add_word(key.k, f, c.scaled(s), pm);
      }
    }
  }
  return out;
}

JetElem jet_place_coeff(const XPoly& c, const MultiIndex& k,
                        const std::vector<MultiIndex>& factors, int pos,
                        const XPoly& g, const MultiIndex& J,
                        const LevelCtx& ctx) {
  long pm = ctx.pm();
  JetElem out(static_cast<int>(factors.size()));
  if (g.is_zero() || c.is_zero()) return out;
  if (J.is_zero()) {
    // plain polynomial coefficients move freely in the linearized complex
    out.add_word(k, factors, c * g, pm);
    return out;
  }
  if (pos <= 1) {
    for (auto& [k2, h] : dp_mul_basis(k, J, ctx).terms())
      out.add_word(k2, factors, c * g * h, pm);
    return out;
  }
  // one step left across the factor at slot pos-2
  out += jet_place_coeff(c, k, factors, pos - 1, g, J, ctx);
  const MultiIndex f = factors[pos - 2];
  for (auto& kp : multi_range(J)) {
    if (kp.is_zero() || kp.total() > pm) continue;
    RatFuncQ a = hl_angle_q_multi(J, kp, ctx);
    for (auto& [M, hM] : dp_mul_basis(kp, f, ctx).terms()) {
      if (M.total() > pm) continue;
      // hM lives in the second slot, so it enters through the Taylor map
      DPElem th = taylor(hM, ctx);
      for (auto& [J2, g2] : th.terms())
        for (auto& [J3, h3] : dp_mul_basis(J - kp, J2, ctx).terms()) {
          std::vector<MultiIndex> f2 = factors;
          f2[pos - 2] = M;
          out += jet_place_coeff(c.scaled(a), k, f2, pos - 1, g * g2 * h3, J3,
                                 ctx);
        }
    }
  }
  return out;
}

namespace {

JetElem h_word(const XPoly& c, const MultiIndex& K,
               const std::vector<MultiIndex>& factors, const LevelCtx& ctx) {
  int d = ctx.d;
  long pm = ctx.pm();
  int r = static_cast<int>(factors.size());
  // first factor carrying the last variable
  int sj = -1;
  for (int j = 0; j < r; ++j)
    if (factors[j][d - 1] != 0) {
      sj = j;
      break;
    }
  if (sj < 0) return JetElem(std::max(r - 1, 0));  // s = r and l = 0
  long k = K[d - 1];
  if (k % pm != 0) return JetElem(r - 1);
  long l = factors[sj][d - 1];
  MultiIndex lhat = factors[sj];
  lhat[d - 1] = 0;
  if (!lhat.is_zero()) return JetElem(r - 1);
  int s = sj + 1;
  if (l < pm || s == r) {
    RatFuncQ coeff = hl_angle_q(k + l, k, ctx).inverse();
    if (s % 2 == 0) coeff = -coeff;  // (-1)^{s-1}
    MultiIndex khat = K;
    khat[d - 1] = 0;
    std::vector<MultiIndex> rest;
    rest.reserve(r - 1);
    for (int j = 0; j < r; ++j)
      if (j != sj) rest.push_back(factors[j]);
    MultiIndex J = MultiIndex::unit(d, d - 1, static_cast<int>(k + l));
    return jet_place_coeff(c.scaled(coeff), khat, rest, sj + 1,
                           XPoly(RatFuncQ(1), d), J, ctx);
  }
  // l = p^m with factors remaining on the right: push the block rightwards
  const MultiIndex& next = factors[sj + 1];
  long lnext = next[d - 1];
  MultiIndex nhat = next;
  nhat[d - 1] = 0;
  JetElem out(r - 1);
  if (lnext > 0) {
    RatFuncQ inv = hl_angle_q(pm + lnext, lnext, ctx).inverse();
    for (long lp = lnext + 1; lp <= pm; ++lp) {
      MultiIndex fs =
          MultiIndex::unit(d, d - 1, static_cast<int>(pm + lnext - lp));
      MultiIndex fs1 = nhat;
      fs1[d - 1] = static_cast<int>(lp);
      if (fs1.total() > pm) continue;
      std::vector<MultiIndex> f2 = factors;
      f2[sj] = fs;
      f2[sj + 1] = fs1;
      out -= h_word(c.scaled(inv * hl_angle_q(pm + lnext, lp, ctx)), K, f2,
                    ctx);
    }
  } else {
    std::vector<MultiIndex> f2 = factors;
    std::swap(f2[sj], f2[sj + 1]);
    out -= h_word(c, K, f2, ctx);
    for (long lp = 1; lp < pm; ++lp) {
      MultiIndex fs = MultiIndex::unit(d, d - 1, static_cast<int>(pm - lp));
      MultiIndex fs1 = nhat;
      fs1[d - 1] = static_cast<int>(lp);
      if (fs1.total() > pm) continue;
      std::vector<MultiIndex> f3 = factors;
      f3[sj] = fs;
      f3[sj + 1] = fs1;
      out -= h_word(c.scaled(hl_angle_q(pm, lp, ctx)), K, f3, ctx);
    }
  }
  return out;
}

}  // namespace

JetElem homotopy_h(const JetElem& e, const LevelCtx& ctx) {
  JetElem out(std::max(e.degree() - 1, 0));
  for (auto& [key, c] : e.terms()) out += h_word(c, key.k, key.factors, ctx);
  return out;
}

JetElem jet_pi(const JetElem& e, const LevelCtx& ctx) {
  int d = ctx.d;
  JetElem out(e.degree());
  for (auto& [key, c] : e.terms()) {
    if (key.k[d - 1] != 0) continue;
    bool alive = true;
    for (auto& f : key.factors)
      if (f[d - 1] != 0) alive = false;
    if (!alive) continue;
    out.add_word(key.k, key.factors, c, ctx.pm());
  }
  return out;
}

namespace {

void factor_lists_rec(int len, int total, const std::vector<MultiIndex>& fset,
                      std::vector<MultiIndex>& cur,
                      std::vector<std::vector<MultiIndex>>& out) {
  if (len == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (auto& f : fset) {
    if (f.total() > total) continue;
    cur.push_back(f);
    factor_lists_rec(len - 1, total - f.total(), fset, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<MultiIndex>> factor_lists(
    int len, int total, const std::vector<MultiIndex>& fset) {
  std::vector<std::vector<MultiIndex>> out;
  std::vector<MultiIndex> cur;
  factor_lists_rec(len, total, fset, cur, out);
  return out;
}

std::vector<MultiIndex> relation_indices(const LevelCtx& ctx) {
  std::vector<MultiIndex> out;
  for (long t = ctx.pm() + 1; t <= 2 * ctx.pm(); ++t)
    for (auto& l : multi_of_total(ctx.d, t)) out.push_back(l);
  return out;
}

using WordVec = std::map<std::vector<MultiIndex>, RatFuncQ>;

// relation elements of fixed word length and factor total, coefficient 1
std::vector<WordVec> relation_generators(int len, int total,
                                         const LevelCtx& ctx) {
  long pm = ctx.pm();
  std::vector<MultiIndex> fset = jet_factor_set(ctx.d, pm);
  std::vector<WordVec> out;
  for (auto& l : relation_indices(ctx)) {
    int rem = total - l.total();
    if (rem < 0) continue;
    for (int pos = 0; pos + 2 <= len; ++pos) {
      int lenL = pos, lenR = len - pos - 2;
      for (int tL = 0; tL <= rem; ++tL) {
        auto lefts = factor_lists(lenL, tL, fset);
        auto rights = factor_lists(lenR, rem - tL, fset);
        for (auto& wl : lefts)
          for (auto& wr : rights) {
            WordVec gen;
            for (auto& lp : multi_range(l)) {
              if (lp.is_zero() || lp == l) continue;
              MultiIndex la = l - lp;
              if (la.total() > pm || lp.total() > pm) continue;
              std::vector<MultiIndex> w = wl;
              w.push_back(la);
              w.push_back(lp);
              w.insert(w.end(), wr.begin(), wr.end());
              RatFuncQ coeff = hl_angle_q_multi(l, lp, ctx);
              auto [it, fresh] = gen.emplace(std::move(w), coeff);
              if (!fresh) it->second += coeff;
            }
            if (!gen.empty()) out.push_back(std::move(gen));
          }
      }
    }
  }
  return out;
}

}  // namespace

JetEq jet_eq_mod_relations(const JetElem& a, const JetElem& b, int xdeg_bound,
                           const LevelCtx& ctx) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("jet_eq_mod_relations: degree mismatch");
  JetElem diff = a - b;
  if (diff.is_zero()) return JetEq::equal;
  int r = diff.degree();
  if (r <= 1) return JetEq::not_equal;  // these degrees are free

  // The relation span is homogeneous in the x-monomial, the front index and
  // the factor total, so membership splits into independent word systems.
  struct GKey {
    MultiIndex alpha, K;
    int total;
    bool operator<(const GKey& o) const {
      if (!(alpha == o.alpha)) return alpha < o.alpha;
      if (!(K == o.K)) return K < o.K;
      return total < o.total;
    }
  };
  std::map<GKey, WordVec> groups;
  for (auto& [key, c] : diff.terms()) {
    int total = 0;
    for (auto& f : key.factors) total += f.total();
    for (auto& [alpha, v] : c.terms()) {
      GKey gk{alpha, key.k, total};
      auto [it, fresh] = groups[gk].emplace(key.factors, v);
      if (!fresh) it->second += v;
    }
  }

  bool saw_inconclusive = false;
  for (auto& [gk, vec] : groups) {
    if (gk.alpha.total() > xdeg_bound) {
      saw_inconclusive = true;
      continue;
    }
    std::vector<WordVec> gens = relation_generators(r, gk.total, ctx);
    // closure of the words reachable from the difference terms; generators
    // not meeting the closure cannot take part in a representation
    std::map<std::vector<MultiIndex>, int> index;
    for (auto& [w, c] : vec) index.emplace(w, -1);
    std::vector<bool> used(gens.size(), false);
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        if (used[gi]) continue;
        bool touches = false;
        for (auto& [w, c] : gens[gi])
          if (index.count(w)) {
            touches = true;
            break;
          }
        if (!touches) continue;
        used[gi] = true;
        grew = true;
        for (auto& [w, c] : gens[gi]) index.emplace(w, -1);
      }
    }
    int n = 0;
    for (auto& [w, i] : index) index[w] = n++;
    std::vector<size_t> active;
    for (size_t gi = 0; gi < gens.size(); ++gi)
      if (used[gi]) active.push_back(gi);
    if (active.empty()) return JetEq::not_equal;
    QqMatrix mat(n, static_cast<int>(active.size()));
    for (size_t col = 0; col < active.size(); ++col)
      for (auto& [w, c] : gens[active[col]])
        mat.at(index[w], static_cast<int>(col)) = c;
    std::vector<RatFuncQ> v(n);
    for (auto& [w, c] : vec) v[index[w]] = c;
    if (!in_column_span(mat, v)) return JetEq::not_equal;
  }
  return saw_inconclusive ? JetEq::inconclusive : JetEq::equal;
}

namespace {

JetElem jet_word(const MultiIndex& k, const std::vector<MultiIndex>& factors,
                 const LevelCtx& ctx) {
  JetElem e(static_cast<int>(factors.size()));
  e.add_word(k, factors, XPoly(RatFuncQ(1), ctx.d), ctx.pm());
  return e;
}

bool h_image_vanishes(const JetElem& img, int xdeg_bound, const LevelCtx& ctx,
                      std::string* detail) {
  if (img.degree() <= 1) {
    if (!img.is_zero() && detail) *detail = img.str();
    return img.is_zero();
  }
  JetEq eq = jet_eq_mod_relations(img, JetElem(img.degree()), xdeg_bound, ctx);
  if (eq != JetEq::equal && detail)
    *detail = (eq == JetEq::inconclusive) ? "inconclusive" : img.str();
  return eq == JetEq::equal;
}

}  // namespace

Report verify_h_relations(const LevelCtx& ctx) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "h_relations";
  int d = ctx.d;
  long pm = ctx.pm();
  std::vector<MultiIndex> fset = jet_factor_set(d, pm);
  std::vector<MultiIndex> hatted;
  for (auto& f : fset)
    if (f[d - 1] == 0) hatted.push_back(f);
  std::vector<MultiIndex> rels = relation_indices(ctx);

  std::vector<MultiIndex> fronts;
  for (long k : {0L, pm, 2 * pm}) {
    fronts.push_back(MultiIndex::unit(d, d - 1, static_cast<int>(k)));
    if (d >= 2) {
      MultiIndex f = MultiIndex::unit(d, d - 1, static_cast<int>(k));
      f[0] = 1;
      fronts.push_back(f);
    }
  }

  std::vector<std::vector<MultiIndex>> prefixes = {{}};
  for (auto& hf : hatted) prefixes.push_back({hf});

  const int xdeg = 16;
  for (auto& K : fronts)
    for (auto& pre : prefixes) {
      // the relation inserted right after the prefix, optionally followed
      // by one trailing factor
      for (auto& l : rels) {
        int tails_on = (pre.empty() && K.total() <= pm) ? 1 : 0;
        for (int with_tail = 0; with_tail <= tails_on; ++with_tail) {
          std::vector<std::vector<MultiIndex>> tails = {{}};
          if (with_tail) {
            tails.clear();
            for (auto& f : fset) tails.push_back({f});
          }
          for (auto& tail : tails) {
            JetElem elem(static_cast<int>(pre.size() + 2 + tail.size()));
            for (auto& lp : multi_range(l)) {
              if (lp.is_zero() || lp == l) continue;
              if (lp.total() > pm || (l - lp).total() > pm) continue;
              std::vector<MultiIndex> w = pre;
              w.push_back(l - lp);
              w.push_back(lp);
              w.insert(w.end(), tail.begin(), tail.end());
              elem.add_word(K, w, XPoly(hl_angle_q_multi(l, lp, ctx), d), pm);
            }
            std::string detail;
            bool ok =
                h_image_vanishes(homotopy_h(elem, ctx), xdeg, ctx, &detail);
            rep.tally(ok,
                      "cdf K=" + to_string(K) + " l=" + to_string(l) + " s=" +
                          std::to_string(pre.size() + 1) + " tail=" +
                          std::to_string(tail.size()),
                      "0", ok ? "0" : detail);
          }
        }
      }
      // a pure d-th factor sits between the prefix and the relation
      for (long lpp = 1; lpp <= pm; ++lpp) {
        MultiIndex mid = MultiIndex::unit(d, d - 1, static_cast<int>(lpp));
        std::vector<std::vector<MultiIndex>> gaps = {{}};
        if (d == 1 && pre.empty())
          for (auto& f : fset) gaps.push_back({f});
        for (auto& gap : gaps)
          for (auto& l : rels) {
            JetElem elem(static_cast<int>(pre.size() + 1 + gap.size() + 2));
            for (auto& lp : multi_range(l)) {
              if (lp.is_zero() || lp == l) continue;
              if (lp.total() > pm || (l - lp).total() > pm) continue;
              std::vector<MultiIndex> w = pre;
              w.push_back(mid);
              w.insert(w.end(), gap.begin(), gap.end());
              w.push_back(l - lp);
              w.push_back(lp);
              elem.add_word(K, w, XPoly(hl_angle_q_multi(l, lp, ctx), d), pm);
            }
            std::string detail;
            bool ok =
                h_image_vanishes(homotopy_h(elem, ctx), xdeg, ctx, &detail);
            rep.tally(ok,
                      "cdg K=" + to_string(K) + " l''=" + std::to_string(lpp) +
                          " l=" + to_string(l) + " gap=" +
                          std::to_string(gap.size()),
                      "0", ok ? "0" : detail);
          }
      }
    }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rep;
}

Report verify_homotopy_identity(int index_bound, int degree_bound,
                                int xdeg_bound, const LevelCtx& ctx) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "homotopy_identity";
  int d = ctx.d;
  std::vector<MultiIndex> fronts;
  for (int t = 0; t <= index_bound; ++t)
    for (auto& k : multi_of_total(d, t)) fronts.push_back(k);
  std::vector<MultiIndex> fset = jet_factor_set(d, ctx.pm());

  auto run_case = [&](const MultiIndex& K,
                      const std::vector<MultiIndex>& factors) {
    JetElem w = jet_word(K, factors, ctx);
    if (w.is_zero()) return;
    JetElem lhs = homotopy_h(jet_d(w, ctx), ctx);
    if (w.degree() >= 1) lhs += jet_d(homotopy_h(w, ctx), ctx);
    JetElem rhs = w - jet_pi(w, ctx);
    bool ok;
    std::string detail = "== rhs";
    if (w.degree() <= 1) {
      ok = (lhs == rhs);
      if (!ok) detail = lhs.str() + " vs " + rhs.str();
    } else {
      JetEq eq = jet_eq_mod_relations(lhs, rhs, xdeg_bound, ctx);
      ok = (eq == JetEq::equal);
      if (!ok)
        detail = (eq == JetEq::inconclusive) ? "inconclusive" : "differs";
    }
    std::string in = "xi^{{" + to_string(K) + "}}";
    for (auto& f : factors) in += " dxi^(" + to_string(f) + ")";
    rep.tally(ok, in, "h d + d h = id - pi", detail);
  };

  for (auto& K : fronts) {
    run_case(K, {});
    if (degree_bound >= 1)
      for (auto& f : fset) run_case(K, {f});
    if (degree_bound >= 2)
      for (auto& f1 : fset)
        for (auto& f2 : fset) run_case(K, {f1, f2});
  }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rep;
}

Report verify_qjfp_truncation(int bound, const LevelCtx& ctx) {
  auto t0 = std::chrono::steady_clock::now();
  if (ctx.d != 1)
    throw std::invalid_argument("verify_qjfp_truncation: d = 1 only");
  Report rep;
  rep.suite = "qjfp_truncation";
  long pm = ctx.pm();
  std::vector<MultiIndex> fset = jet_factor_set(1, pm);
  for (int t = 1; t <= bound; ++t) {
    // degree 0 -> 1: d^0 kills only the constants in each pure slice
    JetElem d0 = jet_d(jet_word(MultiIndex({t}), {}, ctx), ctx);
    rep.tally(!d0.is_zero(), "weight " + std::to_string(t) + " ker d0",
              "trivial", d0.is_zero() ? "nontrivial kernel" : "trivial");
    // degree 1 -> 2 modulo relations: kernel = image of d^0
    std::vector<JetKey> v1;
    for (auto& f : fset)
      if (f.total() <= t) v1.push_back({MultiIndex({t - f[0]}), {f}});
    std::map<std::vector<int>, int> rows;
    auto row_of = [&](const MultiIndex& K, const std::vector<MultiIndex>& w) {
      std::vector<int> key = {K[0], w[0][0], w[1][0]};
      auto [it, fresh] = rows.emplace(key, static_cast<int>(rows.size()));
      return it->second;
    };
    struct Entry {
      int row, col;
      RatFuncQ v;
    };
    std::vector<Entry> m1_entries, rel_entries;
    for (size_t j = 0; j < v1.size(); ++j) {
      JetElem img = jet_d(jet_word(v1[j].k, v1[j].factors, ctx), ctx);
      for (auto& [key, c] : img.terms()) {
        if (c.terms().size() != 1 || !c.terms().begin()->first.is_zero())
          throw std::logic_error("qjfp: non-scalar slice entry");
        m1_entries.push_back({row_of(key.k, key.factors),
                              static_cast<int>(j),
                              c.terms().begin()->second});
      }
    }
    // relation columns: xi^{{K}} * REL(l) with K + |l| = t
    int rel_cols = 0;
    for (auto& l : relation_indices(ctx)) {
      if (l.total() > t) continue;
      int kfront = t - static_cast<int>(l.total());
      bool any = false;
      for (auto& lp : multi_range(l)) {
        if (lp.is_zero() || lp == l) continue;
        if (lp.total() > pm || (l - lp).total() > pm) continue;
        rel_entries.push_back(
            {row_of(MultiIndex({kfront}), {l - lp, lp}), rel_cols,
             hl_angle_q_multi(l, lp, ctx)});
        any = true;
      }
      if (any) ++rel_cols;
    }
    int nrows = static_cast<int>(rows.size());
    QqMatrix m1(std::max(nrows, 1), static_cast<int>(v1.size()));
    for (auto& e : m1_entries) m1.at(e.row, e.col) = e.v;
    QqMatrix rel(std::max(nrows, 1), std::max(rel_cols, 1));
    for (auto& e : rel_entries) rel.at(e.row, e.col) = e.v;
    int rank_rel = rel.rank();
    int rank_all = rel.augmented(m1).rank();
    long ker = static_cast<long>(v1.size()) - (rank_all - rank_rel);
    rep.tally(ker == 1, "weight " + std::to_string(t) + " homology deg 1",
              "one-dimensional kernel (the d0 image)",
              "kernel dim " + std::to_string(ker));
  }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rep;
}

}  // namespace qlev
