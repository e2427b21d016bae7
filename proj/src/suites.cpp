#include "qlev/suites.hpp"

#include <chrono>

#include "qlev/derham.hpp"
#include "qlev/jet.hpp"

namespace qlev {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

struct Rng {
  unsigned long s = 0x2545f4914f6cdd1dull;
  unsigned long next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int pick(int n) { return static_cast<int>(next() % n); }
};

Report suite_pascal_factorial(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "pascal_factorial";
  for (long k = 0; k <= cfg.max_index; ++k)
    for (long kp = 0; kp <= k; ++kp) {
      RatFuncQ f = q_binom_factorial(k, kp);
      bool ok = f.is_polynomial() && f.num() == q_binom_pascal(k, kp);
      rep.tally(ok, "(" + std::to_string(k) + "," + std::to_string(kp) + ")",
                q_binom_pascal(k, kp).str(), f.str());
    }
  rep.millis = t.ms();
  return rep;
}

Report suite_multiplicativity(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "multiplicativity";
  LevelCtx ctx = cfg.ctx();
  for (int j = 0; j <= 2; ++j) {
    int e = static_cast<int>(ctx.ppow(j));
    for (long n = 0; n <= 12; ++n)
      for (long np = 0; np <= 12; ++np) {
        IntPolyQ lhs = q_int(n * np, e);
        IntPolyQ rhs = q_int(n, e) * q_int(np, e * static_cast<int>(n));
        rep.tally(lhs == rhs,
                  "n=" + std::to_string(n) + " n'=" + std::to_string(np) +
                      " j=" + std::to_string(j),
                  lhs.str(), rhs.str());
      }
  }
  rep.millis = t.ms();
  return rep;
}

Report suite_integrality(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "integrality";
  LevelCtx ctx = cfg.ctx();
  long bound = 3 * ctx.pm() + ctx.p;
  for (long k = 0; k <= bound; ++k)
    for (long kp = 0; kp <= k; ++kp) {
      bool ok = true;
      std::string detail = "certified";
      try {
        hl_brace(k, kp, ctx);
        hl_angle(k, kp, ctx);
      } catch (const CertError& e) {
        ok = false;
        detail = e.what();
      }
      rep.tally(ok, "(" + std::to_string(k) + "," + std::to_string(kp) + ")",
                "brace in Z[q], angle localized", detail);
    }
  rep.millis = t.ms();
  return rep;
}

Report suite_ipmq_congruence(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "ipmq_congruence";
  LevelCtx ctx = cfg.ctx();
  long pm = ctx.pm();
  for (long k = pm; k <= 3 * pm; ++k) {
    RatFuncQ v = hl_angle(k, pm, ctx).value;
    mpz_class num = v.num().eval_one(), den = v.den().eval_one();
    bool ok = (den % ctx.p != 0) && ((num - den) % ctx.p == 0);
    rep.tally(ok, "<" + std::to_string(k) + "\\" + std::to_string(pm) + ">",
              "1 mod p at q=1",
              "(" + num.get_str() + ")/(" + den.get_str() + ")");
  }
  rep.millis = t.ms();
  return rep;
}

Report suite_clmus_units(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "clmus_units";
  LevelCtx ctx = cfg.ctx();
  if (ctx.m == 0) {
    rep.millis = t.ms();
    return rep;  // no admissible s when p^m = 1
  }
  for (long r = 0; r <= 4; ++r)
    for (long s = 1; s < ctx.pm(); ++s) {
      bool ok = true;
      std::string detail = "unit";
      try {
        LocalizedQ u = clmus_unit(r, s, ctx);
        ok = u.value * RatFuncQ(q_int(s)) == RatFuncQ(q_int(ctx.pm() * r + s));
        if (!ok) detail = "product mismatch";
      } catch (const CertError& e) {
        ok = false;
        detail = e.what();
      }
      rep.tally(ok, "r=" + std::to_string(r) + " s=" + std::to_string(s),
                "(p^m r + s)_q = u (s)_q with u a unit", detail);
    }
  rep.millis = t.ms();
  return rep;
}

Report suite_specialization(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "specialization";
  LevelCtx ctx = cfg.ctx();
  long bound = 3 * ctx.pm() + ctx.p;
  for (long k = 0; k <= bound; ++k)
    for (long kp = 0; kp <= k; ++kp) {
      RatFuncQ v = hl_angle(k, kp, ctx).value;
      mpq_class got(v.num().eval_one(), v.den().eval_one());
      got.canonicalize();
      bool ok = got == classical_angle(k, kp, ctx) &&
                hl_brace(k, kp, ctx).eval_one() == classical_brace(k, kp, ctx);
      rep.tally(ok, "(" + std::to_string(k) + "," + std::to_string(kp) + ")",
                "classical values at q=1", got.get_str());
    }
  rep.millis = t.ms();
  return rep;
}

Report suite_level0_collapse(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "level0_collapse";
  LevelCtx ctx(cfg.p, 0, cfg.d);
  for (long k = 0; k <= cfg.max_index; ++k)
    for (long kp = 0; kp <= k; ++kp) {
      bool ok = hl_brace(k, kp, ctx) == q_binom_pascal(k, kp) &&
                hl_angle(k, kp, ctx).value.is_one();
      rep.tally(ok, "(" + std::to_string(k) + "," + std::to_string(kp) + ")",
                "brace = q-binomial, angle = 1",
                hl_angle(k, kp, ctx).value.str());
    }
  rep.millis = t.ms();
  return rep;
}

Report suite_frobenius_hom(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "frobenius_hom";
  LevelCtx ctx = cfg.ctx();
  Rng rng;
  auto random_poly = [&]() {
    FullPoly r(RatFuncQ(0), ctx.d, ctx.d);
    for (int tt = 0; tt <= rng.pick(3); ++tt) {
      MultiIndex xe = MultiIndex::zeros(ctx.d), xie = MultiIndex::zeros(ctx.d);
      for (int i = 0; i < ctx.d; ++i) {
        xe[i] = rng.pick(3);
        xie[i] = rng.pick(3);
      }
      std::vector<mpz_class> cs;
      for (int j = 0; j <= rng.pick(2); ++j) cs.emplace_back(rng.pick(7) - 3);
      r.add_term(Mono{xe, xie}, RatFuncQ(IntPolyQ(cs)));
    }
    return r;
  };
  for (int trial = 0; trial < 10; ++trial) {
    FullPoly f = random_poly(), g = random_poly();
    bool ok = frobenius(f * g, 1, ctx) ==
                  frobenius(f, 1, ctx) * frobenius(g, 1, ctx) &&
              frobenius(f + g, 1, ctx) ==
                  frobenius(f, 1, ctx) + frobenius(g, 1, ctx);
    rep.tally(ok, "random pair " + std::to_string(trial),
              "phi(fg) = phi(f)phi(g)", ok ? "ok" : "mismatch");
  }
  for (int i = 0; i < ctx.d; ++i) {
    FullPoly s = x_var(ctx, i) + xi_var(ctx, i);
    bool ok = frobenius(s, 1, ctx) == s.pow(static_cast<int>(ctx.p));
    rep.tally(ok, "rank-one witness x" + std::to_string(i + 1),
              "phi(x+xi) = (x+xi)^p", ok ? "ok" : "mismatch");
  }
  rep.millis = t.ms();
  return rep;
}

Report suite_twisted_recursion(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "twisted_recursion";
  LevelCtx ctx = cfg.ctx();
  for (long k = 0; k <= cfg.max_index; ++k) {
    FullPoly fac =
        xi_var(ctx, 0) + x_var(ctx, 0).scaled(RatFuncQ(
                             IntPolyQ(1) - IntPolyQ::q_power(static_cast<int>(k))));
    bool ok = twisted_power(0, k + 1, ctx) == twisted_power(0, k, ctx) * fac;
    rep.tally(ok, "k=" + std::to_string(k),
              "xi^{(k+1)} = xi^{(k)} (xi + (1-q^k)x)", ok ? "ok" : "mismatch");
  }
  rep.millis = t.ms();
  return rep;
}

Report suite_quantum_binomial(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "quantum_binomial";
  LevelCtx two(cfg.p, cfg.m, 2);
  FullPoly a = x_var(two, 0), b = x_var(two, 1);
  for (long k = 0; k <= 8; ++k) {
    bool ok = true;
    std::string detail = "product = closed form";
    try {
      quantum_binomial_expand(a, b, k);
    } catch (const CertError& e) {
      ok = false;
      detail = e.what();
    }
    rep.tally(ok, "k=" + std::to_string(k), "two routes agree", detail);
  }
  rep.millis = t.ms();
  return rep;
}

Report suite_dp_soundness(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "dp_soundness";
  // d = 1 exhaustive for p = 2, m in {0, 1}
  for (int m : {0, 1}) {
    LevelCtx ctx(2, m, 1);
    int bound = 2 * static_cast<int>(ctx.pm()) + 2;
    for (int k = 0; k <= bound; ++k)
      for (int kp = 0; kp <= bound; ++kp) {
        MultiIndex a({k}), b({kp});
        const DPElem& prod = dp_mul_basis(a, b, ctx);
        bool ok = dp_embed(prod, ctx) ==
                      dp_embed_basis(a, ctx) * dp_embed_basis(b, ctx) &&
                  dp_mul_basis(b, a, ctx) == prod &&
                  dp_mul(prod, DPElem::one(1), ctx) == prod;
        rep.tally(ok,
                  "m=" + std::to_string(m) + " (" + std::to_string(k) + "," +
                      std::to_string(kp) + ")",
                  "embedding homomorphism", ok ? "ok" : "mismatch");
      }
    // associativity on a smaller exhaustive range
    int abound = static_cast<int>(ctx.pm()) + 2;
    for (int k = 0; k <= abound; ++k)
      for (int kp = 0; kp <= abound; ++kp)
        for (int kpp = 0; kpp <= abound; ++kpp) {
          DPElem ab = dp_mul_basis(MultiIndex({k}), MultiIndex({kp}), ctx);
          DPElem bc = dp_mul_basis(MultiIndex({kp}), MultiIndex({kpp}), ctx);
          bool ok = dp_mul(ab, DPElem::generator(MultiIndex({kpp})), ctx) ==
                    dp_mul(DPElem::generator(MultiIndex({k})), bc, ctx);
          rep.tally(ok,
                    "assoc m=" + std::to_string(m) + " (" + std::to_string(k) +
                        "," + std::to_string(kp) + "," + std::to_string(kpp) +
                        ")",
                    "associative", ok ? "ok" : "mismatch");
        }
  }
  // 200 random d = 2 triples at the configured prime
  LevelCtx ctx(cfg.p, cfg.m, 2);
  Rng rng;
  int span = 2 * static_cast<int>(ctx.pm()) + 3;
  for (int trial = 0; trial < 200; ++trial) {
    MultiIndex a({rng.pick(span), rng.pick(span)});
    MultiIndex b({rng.pick(span), rng.pick(span)});
    MultiIndex c({rng.pick(3), rng.pick(3)});
    const DPElem& ab = dp_mul_basis(a, b, ctx);
    bool ok = dp_embed(ab, ctx) ==
                  dp_embed_basis(a, ctx) * dp_embed_basis(b, ctx) &&
              dp_mul_basis(b, a, ctx) == ab &&
              dp_mul(ab, DPElem::generator(c), ctx) ==
                  dp_mul(DPElem::generator(a),
                         dp_mul_basis(b, c, ctx), ctx);
    rep.tally(ok, "triple " + to_string(a) + to_string(b) + to_string(c),
              "embedding/commutative/associative", ok ? "ok" : "mismatch");
  }
  rep.millis = t.ms();
  return rep;
}

Report suite_dp_integrality(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "dp_integrality";
  LevelCtx ctx(cfg.p, cfg.m, 1);
  int bound = 2 * static_cast<int>(ctx.pm()) + 2;
  for (int k = 0; k <= bound; ++k)
    for (int kp = 0; kp <= bound; ++kp) {
      bool ok = true;
      for (auto& [idx, c] :
           dp_mul_basis(MultiIndex({k}), MultiIndex({kp}), ctx).terms())
        for (auto& [xe, v] : c.terms())
          if (!in_localized(v, ctx.p)) ok = false;
      rep.tally(ok, "(" + std::to_string(k) + "," + std::to_string(kp) + ")",
                "coefficients localized", ok ? "ok" : "failure");
    }
  rep.millis = t.ms();
  return rep;
}

Report suite_taylor_hom(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "taylor_hom";
  LevelCtx ctx = cfg.ctx();
  std::vector<XPoly> monos;
  for (int tt = 0; tt <= 4; ++tt)
    for (auto& a : multi_of_total(ctx.d, tt))
      monos.push_back(XPoly::monomial(a, RatFuncQ(1)));
  for (size_t i = 0; i < monos.size(); ++i)
    for (size_t j = i; j < monos.size(); ++j) {
      if (monos[i].max_total_degree() + monos[j].max_total_degree() > 4)
        continue;
      bool ok = taylor(monos[i] * monos[j], ctx) ==
                dp_mul(taylor(monos[i], ctx), taylor(monos[j], ctx), ctx);
      rep.tally(ok, "pair " + std::to_string(i) + "," + std::to_string(j),
                "theta(fg) = theta(f) theta(g)", ok ? "ok" : "mismatch");
    }
  rep.millis = t.ms();
  return rep;
}

Report suite_flip_involution(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "flip_involution";
  LevelCtx ctx = cfg.ctx();
  for (int tt = 0; tt <= cfg.max_index; ++tt)
    for (auto& k : multi_of_total(ctx.d, tt)) {
      DPElem g = DPElem::generator(k);
      rep.tally(flip(flip(g, ctx), ctx) == g, "k=" + to_string(k),
                "tau^2 = id", "involution");
    }
  XPoly xv = XPoly::var(ctx.d, 0, RatFuncQ(1));
  rep.tally(flip(DPElem(xv, ctx.d), ctx) == taylor(xv, ctx), "x1",
            "tau on A = theta", "agrees");
  rep.tally(flip(taylor(xv * xv, ctx), ctx) == DPElem(xv * xv, ctx.d),
            "theta(x1^2)", "tau o theta = id on A", "agrees");
  rep.millis = t.ms();
  return rep;
}

Report suite_dp_frobenius(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "dp_frobenius";
  LevelCtx ctx(cfg.p, cfg.m, 1);
  int bound = static_cast<int>(ctx.pm()) + 2;
  for (int k = 0; k <= bound; ++k) {
    bool ok = true;
    std::string detail = "certified";
    try {
      DPElem fk = dp_frobenius(DPElem::generator(MultiIndex({k})), ctx);
      for (int kp = 0; kp <= 2; ++kp) {
        DPElem fkp = dp_frobenius(DPElem::generator(MultiIndex({kp})), ctx);
        if (dp_frobenius(dp_mul_basis(MultiIndex({k}), MultiIndex({kp}), ctx),
                         ctx) != dp_mul(fk, fkp, ctx)) {
          ok = false;
          detail = "not multiplicative";
        }
      }
    } catch (const CertError& e) {
      ok = false;
      detail = e.what();
    }
    rep.tally(ok, "k=" + std::to_string(k), "phi certified, multiplicative",
              detail);
  }
  rep.millis = t.ms();
  return rep;
}

Report suite_comul(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "comul";
  for (int d : {1, 2}) {
    LevelCtx ctx(cfg.p, cfg.m, d);
    int bound = 2 * static_cast<int>(ctx.pm());
    for (int tt = 0; tt <= bound; ++tt)
      for (auto& k : multi_of_total(d, tt)) {
        DPElem a = DPElem::generator(k);
        // embedded coproduct: xi_i -> xi_i^(1) + xi_i^(2)
        std::vector<FullPoly> x_img, xi_img;
        for (int i = 0; i < d; ++i)
          x_img.push_back(FullPoly::x_var(d, 2 * d, i, RatFuncQ(1)));
        for (int i = 0; i < d; ++i)
          xi_img.push_back(FullPoly::xi_var(d, 2 * d, i, RatFuncQ(1)) +
                           FullPoly::xi_var(d, 2 * d, d + i, RatFuncQ(1)));
        TensorElem cm = comul(a, ctx);
        bool ok = subst<RatFuncQ>(dp_embed(a, ctx), nullptr, x_img, xi_img, d,
                                  2 * d) == tensor_embed(cm, ctx);
        // coassociativity and the two counit laws
        ok = ok && face(cm, 1, ctx) == face(cm, 2, ctx);
        ok = ok && degeneracy(cm, 0, ctx) == TensorElem::from_dp(a);
        ok = ok && degeneracy(cm, 1, ctx) == TensorElem::from_dp(a);
        rep.tally(ok, "d=" + std::to_string(d) + " k=" + to_string(k),
                  "embedded coproduct, coassociative, counital",
                  ok ? "ok" : "mismatch");
      }
  }
  rep.millis = t.ms();
  return rep;
}

Report suite_cosimplicial(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "cosimplicial";
  LevelCtx ctx = cfg.ctx();
  int bound = 2 * static_cast<int>(ctx.pm()) + 2;
  for (int tt = 0; tt <= bound; ++tt)
    for (auto& k : multi_of_total(ctx.d, tt)) {
      TensorElem w = TensorElem::from_dp(DPElem::generator(k));
      bool ok = true;
      for (int i = 0; i <= 2 && ok; ++i)
        for (int j = i + 1; j <= 3 && ok; ++j)
          if (face(face(w, i, ctx), j, ctx) != face(face(w, j - 1, ctx), i, ctx))
            ok = false;
      ok = ok && degeneracy(face(w, 0, ctx), 0, ctx) == w &&
           degeneracy(face(w, 1, ctx), 0, ctx) == w &&
           degeneracy(face(w, 1, ctx), 1, ctx) == w &&
           degeneracy(face(w, 2, ctx), 1, ctx) == w;
      ok = ok &&
           cosimplicial_d(cosimplicial_d(w, false, ctx), false, ctx).is_zero();
      ok = ok &&
           cosimplicial_d(cosimplicial_d(w, true, ctx), true, ctx).is_zero();
      rep.tally(ok, "k=" + to_string(k), "simplicial identities, d^2 = 0",
                ok ? "ok" : "mismatch");
    }
  // degree 2 words
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      TensorElem w(2);
      w.add_term({MultiIndex::unit(ctx.d, 0, a), MultiIndex::unit(ctx.d, 0, b)},
                 XPoly(RatFuncQ(1), ctx.d));
      bool ok =
          cosimplicial_d(cosimplicial_d(w, false, ctx), false, ctx).is_zero() &&
          cosimplicial_d(cosimplicial_d(w, true, ctx), true, ctx).is_zero();
      rep.tally(ok, "degree-2 word " + std::to_string(a) + "," +
                        std::to_string(b),
                "d^2 = 0", ok ? "ok" : "mismatch");
    }
  rep.millis = t.ms();
  return rep;
}

Report suite_stratification(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "stratification";
  LevelCtx ctx(cfg.p, cfg.m, 1);
  for (int k = 0; k <= static_cast<int>(ctx.pm()) + 1; ++k) {
    TensorElem w(2);
    w.add_term({MultiIndex({0}), MultiIndex({k})}, XPoly(RatFuncQ(1), 1));
    std::vector<FullPoly> x_img = {FullPoly::x_var(1, 2, 0, RatFuncQ(1))};
    std::vector<FullPoly> xi_img = {FullPoly::xi_var(1, 2, 0, RatFuncQ(1)) +
                                        FullPoly::xi_var(1, 2, 1, RatFuncQ(1)),
                                    -FullPoly::xi_var(1, 2, 1, RatFuncQ(1))};
    bool ok = subst<RatFuncQ>(tensor_embed(w, ctx), nullptr, x_img, xi_img, 1,
                              2) ==
              tensor_embed_plain(stratification_eps(w, ctx), ctx);
    rep.tally(ok, "eps(1 (x)' xi^{{" + std::to_string(k) + "}})",
              "slot-swap embedding", ok ? "ok" : "mismatch");
  }
  rep.millis = t.ms();
  return rep;
}

Report suite_rg_basis(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "rg_basis";
  LevelCtx ctx(cfg.p, cfg.m, 1);
  for (int r = 0; r <= 4; ++r) {
    bool ok = true;
    std::string detail = "localized";
    try {
      DPElem e = rg_basis_change(MultiIndex({r}), ctx);
      // round trip through the embedding
      FullPoly base = frobenius(xi_var(ctx, 0), ctx.m, ctx);
      int pm = static_cast<int>(ctx.pm());
      FullPoly y = x_var(ctx, 0).pow(pm).scaled(
          RatFuncQ(IntPolyQ(1) - IntPolyQ::q_power(pm)));
      FullPoly expect = twisted_power_of(base, r, y, pm).scaled(
          RatFuncQ(q_factorial(r, pm)).inverse());
      if (dp_embed(e, ctx) != expect) {
        ok = false;
        detail = "embedding mismatch";
      }
    } catch (const CertError& e) {
      ok = false;
      detail = e.what();
    }
    rep.tally(ok, "r=" + std::to_string(r), "certified basis change", detail);
  }
  rep.millis = t.ms();
  return rep;
}

Report suite_clpin(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "clpin";
  LevelCtx ctx(cfg.p, cfg.m, 1);
  for (int n : {1, 2})
    for (int v : {0, 1}) {
      bool ok = clpin_check(n, v, ctx);
      rep.tally(ok, "n=" + std::to_string(n) + " v=" + std::to_string(v),
                "divisible by (p)_{q^{p^{m+n-1}}}", ok ? "true" : "false");
    }
  rep.millis = t.ms();
  return rep;
}

Report suite_derham_dd(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "derham_dd";
  LevelCtx ctx = cfg.ctx();
  int bound = 2 * static_cast<int>(ctx.pm()) + 2;
  for (int tt = 0; tt <= bound; ++tt)
    for (auto& k : multi_of_total(ctx.d, tt))
      for (int r = 0; r <= ctx.d; ++r) {
        std::vector<std::vector<int>> wedges;
        std::function<void(int, std::vector<int>&)> rec =
            [&](int start, std::vector<int>& cur) {
              if (static_cast<int>(cur.size()) == r) {
                wedges.push_back(cur);
                return;
              }
              for (int i = start; i < ctx.d; ++i) {
                cur.push_back(i);
                rec(i + 1, cur);
                cur.pop_back();
              }
            };
        std::vector<int> cur;
        rec(0, cur);
        for (auto& s : wedges) {
          DeRhamElem e(r);
          e.add_term({k, s}, XPoly(RatFuncQ(1), ctx.d));
          bool ok = derham_d(derham_d(e, ctx), ctx).is_zero();
          rep.tally(ok, "k=" + to_string(k) + " r=" + std::to_string(r),
                    "d^2 = 0", ok ? "ok" : "nonzero");
        }
      }
  rep.millis = t.ms();
  return rep;
}

Report suite_derham_quotient(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "derham_quotient";
  LevelCtx ctx = cfg.ctx();
  int bound = static_cast<int>(ctx.pm()) * 2 + 1;
  for (int tt = 0; tt <= bound; ++tt)
    for (auto& k : multi_of_total(ctx.d, tt)) {
      TensorElem w(1);
      w.add_term({k}, XPoly(RatFuncQ(1), ctx.d));
      bool ok = derham_reduce(cosimplicial_d(w, true, ctx), true, ctx) ==
                derham_d(derham_reduce(w, true, ctx), ctx);
      rep.tally(ok, "deg 0, k=" + to_string(k), "reduce o d = d o reduce",
                ok ? "ok" : "mismatch");
    }
  for (int tk = 0; tk <= 2; ++tk)
    for (auto& k : multi_of_total(ctx.d, tk))
      for (int tf = 1; tf <= static_cast<int>(ctx.pm()) + 1; ++tf)
        for (auto& f : multi_of_total(ctx.d, tf)) {
          TensorElem w(2);
          w.add_term({k, f}, XPoly(RatFuncQ(1), ctx.d));
          bool ok = derham_reduce(cosimplicial_d(w, true, ctx), true, ctx) ==
                    derham_d(derham_reduce(w, true, ctx), ctx);
          rep.tally(ok, "deg 1, k=" + to_string(k) + " f=" + to_string(f),
                    "reduce o d = d o reduce", ok ? "ok" : "mismatch");
        }
  rep.millis = t.ms();
  return rep;
}

Report suite_poincare(const RunConfig& cfg) {
  Report rep = verify_poincare(cfg.max_index, cfg.ctx());
  return rep;
}

Report suite_plst(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "plst";
  LevelCtx ctx(cfg.p, cfg.m, 1);
  auto neg_x_pow = [](int k) {
    long e = static_cast<long>(k) * (k - 1) / 2;
    RatFuncQ c(IntPolyQ::q_power(static_cast<int>(e),
                                 (k % 2 == 0) ? mpz_class(1) : mpz_class(-1)));
    return XPoly::monomial(MultiIndex({k}), c);
  };
  // (istra) vanishing
  for (int l = 1; l <= 6; ++l)
    for (int lpp = 0; lpp < l; ++lpp) {
      XPoly sum;
      for (int lp = lpp; lp <= l; ++lp)
        sum += (neg_x_pow(l - lp) *
                XPoly::monomial(MultiIndex({lp - lpp}), RatFuncQ(1)))
                   .scaled(q_binom_q(l, lp) * q_binom_q(lp, lpp));
      rep.tally(sum.is_zero(),
                "istra l=" + std::to_string(l) + " l''=" + std::to_string(lpp),
                "0", sum.str());
    }
  // (hstr)
  for (int lp = 0; lp < static_cast<int>(ctx.pm()); ++lp) {
    DPElem lhs = flip(DPElem::generator(MultiIndex({lp})), ctx);
    DPElem rhs;
    for (int lpp = 0; lpp <= lp; ++lpp)
      rhs += taylor(neg_x_pow(lpp), ctx)
                 .scaled(XPoly::monomial(MultiIndex({lp - lpp}),
                                         q_binom_q(lp, lpp)));
    rep.tally(lhs == rhs, "hstr l'=" + std::to_string(lp),
              "tau = theta-expansion", lhs == rhs ? "ok" : "mismatch");
  }
  // the stratification diagram: eps(1 (x)' xi^{{k}}) agrees with
  // (iota (x) 1) applied to the F-side stratification of the beta image
  for (int k = 0; k < static_cast<int>(ctx.pm()); ++k) {
    TensorElem in(2);
    in.add_term({MultiIndex({0}), MultiIndex({k})}, XPoly(RatFuncQ(1), 1));
    TensorElem lhs = stratification_eps(in, ctx);
    TensorElem rhs(2);
    for (int kp = 0; kp <= k; ++kp) {
      CopiesElem e;
      e.add_term(MultiIndex({k - kp}), XPoly(RatFuncQ(1), 1));
      DeRhamElem im = iota(e, ctx);
      DPElem theta = taylor(neg_x_pow(kp), ctx);
      for (auto& [key1, c1] : im.terms())
        for (auto& [j2, c2] : theta.terms())
          rhs.add_term({key1.k, j2}, (c1 * c2).scaled(q_binom_q(k, kp)));
    }
    rep.tally(lhs == rhs, "eps diagram k=" + std::to_string(k),
              "eps o (1 (x)' iota) = (iota (x) 1) o eps_F",
              lhs == rhs ? "ok" : "mismatch");
  }
  // the coefficient reduction of the same diagram
  for (int k = 0; k < static_cast<int>(ctx.pm()); ++k) {
    std::map<int, DPElem> lhs, rhs;
    for (int kp = 0; kp <= k; ++kp) {
      RatFuncQ ck = q_binom_q(k, kp);
      DPElem tau = flip(DPElem::generator(MultiIndex({k - kp})), ctx);
      for (int kpp = 0; kpp <= kp; ++kpp)
        lhs[kp - kpp] +=
            tau.scaled(neg_x_pow(kpp)).scaled(ck * q_binom_q(kp, kpp));
      rhs[k - kp] += taylor(neg_x_pow(kp), ctx).scaled(ck);
    }
    bool ok = true;
    for (int j = 0; j <= k; ++j)
      if (lhs[j] != rhs[j]) ok = false;
    rep.tally(ok, "diagram k=" + std::to_string(k), "ssttrr = bstr",
              ok ? "ok" : "mismatch");
  }
  rep.millis = t.ms();
  return rep;
}

Report suite_jet_dd(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "jet_dd";
  LevelCtx ctx = cfg.ctx();
  long pm = ctx.pm();
  int bound = 2 * static_cast<int>(pm) + 2;
  std::vector<MultiIndex> fset = jet_factor_set(ctx.d, pm);
  for (int tt = 0; tt <= bound; ++tt)
    for (auto& k : multi_of_total(ctx.d, tt)) {
      JetElem w(0);
      w.add_word(k, {}, XPoly(RatFuncQ(1), ctx.d), pm);
      JetElem dd = jet_d(jet_d(w, ctx), ctx);
      bool ok =
          jet_eq_mod_relations(dd, JetElem(2), cfg.xdeg_bound + bound, ctx) ==
          JetEq::equal;
      rep.tally(ok, "deg 0 k=" + to_string(k), "d^2 = 0 mod relations",
                ok ? "ok" : "nonzero");
    }
  if (cfg.max_degree >= 1)
    for (int tt = 0; tt <= 4; ++tt)
      for (auto& k : multi_of_total(ctx.d, tt))
        for (auto& f : fset) {
          JetElem w(1);
          w.add_word(k, {f}, XPoly(RatFuncQ(1), ctx.d), pm);
          JetElem dd = jet_d(jet_d(w, ctx), ctx);
          bool ok = jet_eq_mod_relations(dd, JetElem(3),
                                         cfg.xdeg_bound + bound, ctx) ==
                    JetEq::equal;
          rep.tally(ok, "deg 1 k=" + to_string(k) + " f=" + to_string(f),
                    "d^2 = 0 mod relations", ok ? "ok" : "nonzero");
        }
  if (cfg.max_degree >= 2)
    for (int tt = 0; tt <= 2; ++tt)
      for (auto& k : multi_of_total(ctx.d, tt))
        for (auto& f1 : fset)
          for (auto& f2 : fset) {
            JetElem w(2);
            w.add_word(k, {f1, f2}, XPoly(RatFuncQ(1), ctx.d), pm);
            JetElem dd = jet_d(jet_d(w, ctx), ctx);
            bool ok = jet_eq_mod_relations(dd, JetElem(4),
                                           cfg.xdeg_bound + bound, ctx) ==
                      JetEq::equal;
            rep.tally(ok,
                      "deg 2 k=" + to_string(k) + " " + to_string(f1) +
                          to_string(f2),
                      "d^2 = 0 mod relations", ok ? "ok" : "nonzero");
          }
  rep.millis = t.ms();
  return rep;
}

Report suite_h_relations(const RunConfig& cfg) {
  return verify_h_relations(cfg.ctx());
}

Report suite_homotopy_identity(const RunConfig& cfg) {
  return verify_homotopy_identity(cfg.max_index, cfg.max_degree,
                                  cfg.xdeg_bound + 2 * cfg.max_index,
                                  cfg.ctx());
}

Report suite_qjfp(const RunConfig& cfg) {
  return verify_qjfp_truncation(cfg.max_index, LevelCtx(cfg.p, cfg.m, 1));
}

Report suite_cross_level(const RunConfig& cfg) {
  Timer t;
  Report rep;
  rep.suite = "cross_level";
  LevelCtx ctx(cfg.p, 0, 1);  // m = 0
  long pm = ctx.pm();
  for (int k = 1; k <= cfg.max_index; ++k) {
    // jet differential: single term xi^{{k-1}} (dxi)^{(1)}
    JetElem w(0);
    w.add_word(MultiIndex({k}), {}, XPoly(RatFuncQ(1), 1), pm);
    JetElem dj = jet_d(w, ctx);
    JetElem expectj(1);
    expectj.add_word(MultiIndex({k - 1}), {MultiIndex({1})},
                     XPoly(hl_angle_q(k, 1, ctx), 1), pm);
    bool ok = dj == expectj && hl_angle_q(k, 1, ctx).is_one();
    // de Rham differential agrees on the shared generators
    DeRhamElem e(0);
    e.add_term({MultiIndex({k}), {}}, XPoly(RatFuncQ(1), 1));
    DeRhamElem dr = derham_d(e, ctx);
    DeRhamElem expectr(1);
    expectr.add_term({MultiIndex({k - 1}), {0}},
                     XPoly(hl_angle_q(k, 1, ctx), 1));
    ok = ok && dr == expectr;
    rep.tally(ok, "m=0 k=" + std::to_string(k),
              "single-term classical shape", ok ? "ok" : "mismatch");
  }
  rep.millis = t.ms();
  return rep;
}

}  // namespace

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"pascal_factorial", suite_pascal_factorial},
      {"multiplicativity", suite_multiplicativity},
      {"integrality", suite_integrality},
      {"ipmq_congruence", suite_ipmq_congruence},
      {"clmus_units", suite_clmus_units},
      {"specialization", suite_specialization},
      {"level0_collapse", suite_level0_collapse},
      {"frobenius_hom", suite_frobenius_hom},
      {"twisted_recursion", suite_twisted_recursion},
      {"quantum_binomial", suite_quantum_binomial},
      {"dp_soundness", suite_dp_soundness},
      {"dp_integrality", suite_dp_integrality},
      {"taylor_hom", suite_taylor_hom},
      {"flip_involution", suite_flip_involution},
      {"dp_frobenius", suite_dp_frobenius},
      {"comul", suite_comul},
      {"cosimplicial", suite_cosimplicial},
      {"stratification", suite_stratification},
      {"rg_basis", suite_rg_basis},
      {"clpin", suite_clpin},
      {"derham_dd", suite_derham_dd},
      {"derham_quotient", suite_derham_quotient},
      {"poincare", suite_poincare},
      {"plst", suite_plst},
      {"jet_dd", suite_jet_dd},
      {"h_relations", suite_h_relations},
      {"homotopy_identity", suite_homotopy_identity},
      {"qjfp_truncation", suite_qjfp},
      {"cross_level", suite_cross_level},
  };
  return reg;
}

std::optional<SuiteFn> find_suite(const std::string& name) {
  for (auto& [n, fn] : suite_registry())
    if (n == name) return fn;
  return std::nullopt;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (auto& [n, fn] : suite_registry()) out.push_back(n);
  return out;
}

std::vector<Report> run_suites(const RunConfig& cfg) {
  std::vector<Report> out;
  for (auto& [name, fn] : suite_registry()) {
    bool selected = cfg.suites.empty();
    for (auto& s : cfg.suites)
      if (s == name) selected = true;
    if (selected) out.push_back(fn(cfg));
  }
  return out;
}

}  // namespace qlev
