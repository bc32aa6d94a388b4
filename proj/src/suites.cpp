#include "qcuntz/core/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "json.hpp"
#include "qcuntz/core/cuntzq.hpp"
#include "qcuntz/core/fockrep.hpp"
#include "qcuntz/core/kgroups.hpp"
#include "qcuntz/core/rieffel.hpp"
#include "qcuntz/core/symalg.hpp"
#include "qcuntz/core/untwist.hpp"

namespace qcuntz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Cplx unit_phase(double turns) { return std::polar(1.0, kTwoPi * turns); }

struct CheckSink {
  std::vector<SuiteCheck>* out;

  void add(std::string id, std::string anchor, double residual, double tol) {
    out->push_back({std::move(id), std::move(anchor), residual, tol, residual <= tol});
  }
  void add_exact(std::string id, std::string anchor, bool ok) {
    add(std::move(id), std::move(anchor), ok ? 0.0 : 1.0, 0.0);
  }
};

// Deterministic helpers on top of the raw engine (portable across stdlibs).
struct Rand {
  std::mt19937_64 rng;
  explicit Rand(uint64_t seed) : rng(seed) {}
  uint64_t bits() { return rng(); }
  int upto(int k) { return static_cast<int>(bits() % static_cast<uint64_t>(k)); }
  double real() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }
  double sym() { return 2.0 * real() - 1.0; }
};

RawWord random_word(Rand& rnd, const AlgebraConfig& cfg, int maxlen) {
  int len = 1 + rnd.upto(maxlen);
  RawWord w;
  for (int t = 0; t < len; ++t) {
    bool s_family = rnd.upto(2) == 0;
    Letter l = s_family ? s_letter(1 + rnd.upto(cfg.n)) : t_letter(1 + rnd.upto(cfg.m));
    w.push_back({l, rnd.upto(2) == 0});
  }
  return w;
}

GaussianRational random_scalar(Rand& rnd) {
  long num = static_cast<long>(rnd.upto(9)) - 4;
  long den = 1 + rnd.upto(3);
  long inum = static_cast<long>(rnd.upto(9)) - 4;
  return GaussianRational(mpq_class(num, den), mpq_class(inum, den));
}

Element random_element(Rand& rnd, const AlgebraConfig& cfg, int monomials, int maxlen) {
  ExactCoeffs ring{cfg.vars};
  std::vector<RawTerm<ExactCoeffs>> input;
  for (int t = 0; t < monomials; ++t)
    input.push_back({PhaseCoeff::scalar(cfg.vars, random_scalar(rnd)),
                     random_word(rnd, cfg, maxlen)});
  return normal_order<ExactCoeffs>(cfg, ring, input);
}

/// Random element of the span of s_i t_r t*_l s*_j (level (1,1) units).
NumElement random_level11(Rand& rnd, const AlgebraConfig& cfg, const VarAssignment& a) {
  NumericCoeffs ring{cfg.vars, a};
  NumElement x(cfg, ring);
  for (int i = 1; i <= cfg.n; ++i)
    for (int r = 1; r <= cfg.m; ++r)
      for (int l = 1; l <= cfg.m; ++l)
        for (int j = 1; j <= cfg.n; ++j) {
          Monomial mono;
          mono.creation = {s_letter(i), t_letter(r)};
          mono.annihilation = {s_letter(j), t_letter(l)};
          x.add_term(std::move(mono), Cplx{rnd.sym(), rnd.sym()});
        }
  return x;
}

Element parse_simple(const AlgebraConfig& cfg, std::initializer_list<RawLetter> w) {
  ExactCoeffs ring{cfg.vars};
  return normal_order_word(cfg, ring, RawWord(w));
}

// -----------------------------------------------------------------------
// relations suite
// -----------------------------------------------------------------------

void suite_relations(const SuiteConfig& cfg, CheckSink sink) {
  const std::vector<std::pair<std::string, Cplx>> qs = {
      {"q1", Cplx{1.0, 0.0}}, {"q03", unit_phase(0.3)}, {"qi", Cplx{0.0, 1.0}}};
  const char* form_names[] = {"A", "B", "C"};
  const FockForm forms[] = {FockForm::A, FockForm::B, FockForm::C};

  for (const auto& [qtag, q] : qs) {
    RelationResiduals table[3];
    for (int f = 0; f < 3; ++f) {
      Rep rep = build_fock_rep(cfg.n, cfg.m, cfg.N, cfg.M, q, forms[f]);
      table[f] = relation_residuals(rep, q, 2);
      std::string base = "relations/fock/" + qtag + "/form" + form_names[f];
      sink.add(base + "/ss", "s*_i s_j = delta_ij", table[f].ss, 1e-12);
      sink.add(base + "/tt", "t*_r t_l = delta_rl", table[f].tt, 1e-12);
      sink.add(base + "/st", "s*_j t_r = q t_r s*_j", table[f].st, 1e-12);
      sink.add(base + "/ts", "t_r s_j = q s_j t_r", table[f].ts, 1e-12);
      if (f == 0) {
        // vacuum is the first basis vector
        DVec e0 = DVec::Zero(rep.dim);
        e0(0) = Cplx{1.0, 0.0};
        double vac = 0.0;
        for (int j = 0; j < cfg.n; ++j)
          vac = std::max(vac, (SpMat(rep.S[j].adjoint()) * e0).norm());
        for (int r = 0; r < cfg.m; ++r)
          vac = std::max(vac, (SpMat(rep.T[r].adjoint()) * e0).norm());
        sink.add("relations/fock/" + qtag + "/vacuum",
                 "s*_j vac = 0 and t*_r vac = 0", vac, 0.0);
      }
    }
    double equiv = 0.0;
    for (int f = 1; f < 3; ++f) {
      equiv = std::max(equiv, std::abs(table[f].ss - table[0].ss));
      equiv = std::max(equiv, std::abs(table[f].tt - table[0].tt));
      equiv = std::max(equiv, std::abs(table[f].st - table[0].st));
      equiv = std::max(equiv, std::abs(table[f].ts - table[0].ts));
    }
    sink.add("relations/fock/" + qtag + "/forms_equiv",
             "the three model forms have identical residual tables", equiv, 1e-12);
  }

  // n = m = 1 clock/shift pair with q^3 = 1.
  {
    Rep rep = clock_shift_rep(3, unit_phase(1.0 / 3.0));
    sink.add("relations/clock_shift", "unitary pair with ts = q st, q^3 = 1",
             relation_residuals(rep, unit_phase(1.0 / 3.0), 2).max(), 1e-13);
  }

  // Concrete multiparameter model.
  {
    DMat ones = DMat::Constant(cfg.n, cfg.m, Cplx{1.0, 0.0});
    Rep triv = concrete_theta_rep(cfg.n, cfg.m, ones, 80, 80, 6);
    sink.add("relations/theta_rep/trivial", "all q_ij = 1 gives the plain model",
             theta_relation_residual(triv, ones, 2), 1e-13);

    DMat qmat = ones;
    qmat(0, 0) = unit_phase(0.3);
    Rep tw = concrete_theta_rep(cfg.n, cfg.m, qmat, 80, 80, 6);
    sink.add("relations/theta_rep/twisted", "s_i t_j = q_ij t_j s_i on the interior",
             theta_relation_residual(tw, qmat, 2), 1e-13);

    Cplx spot = theta_zeta(qmat, 1, cfg.m, 0, 1);  // zeta_1(beta_1(0), 1) = q_11
    sink.add("relations/theta_rep/zeta_spot", "zeta_1(beta_1(0), 1) = q_11 zeta_1(0,0)",
             std::abs(spot - qmat(0, 0)), 0.0);
  }

  // Range-sum shift identity and compression contractivity.
  {
    Rep rep = build_fock_rep(cfg.n, cfg.m, cfg.N, cfg.M, cfg.q0, FockForm::A);
    SpMat Q = rep.Q();
    for (int k = 1; k <= 2; ++k) {
      SpMat lhs = Q, rhs(rep.dim, rep.dim);
      // lhs = sum_{|mu|=k} S_mu Q S_mu^*
      for (int step = 0; step < k; ++step) {
        SpMat next(rep.dim, rep.dim);
        for (int j = 0; j < cfg.n; ++j)
          next = next + SpMat(rep.S[j] * SpMat(lhs * SpMat(rep.S[j].adjoint())));
        lhs = next;
      }
      // rhs = sum_{|nu|=k+1} S_nu S_nu^*
      rhs = Q;
      for (int step = 0; step < k; ++step) {
        SpMat next(rep.dim, rep.dim);
        for (int j = 0; j < cfg.n; ++j)
          next = next + SpMat(rep.S[j] * SpMat(rhs * SpMat(rep.S[j].adjoint())));
        rhs = next;
      }
      sink.add("relations/range_shift/k" + std::to_string(k),
               "sum_{|mu|=k} s_mu Q s*_mu = sum_{|nu|=k+1} s_nu s*_nu",
               residual_on_interior(SpMat(lhs - rhs), rep, k + 1), 1e-12);
    }

    Rand rnd(cfg.seed ^ 0x51u);
    Rep small = build_fock_rep(cfg.n, cfg.m, 3, 3, cfg.q0, FockForm::A);
    auto mask = small.interior_mask(2);
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < small.dim; ++i)
      if (mask[i]) idx.push_back(i);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      DMat X = DMat::Zero(small.dim, small.dim);
      for (int t = 0; t < 40; ++t)
        X(idx[rnd.upto(static_cast<int>(idx.size()))],
          idx[rnd.upto(static_cast<int>(idx.size()))]) = Cplx{rnd.sym(), rnd.sym()};
      double nx = operator_norm(X);
      DMat cur = X;
      for (int k = 1; k <= 2; ++k) {
        DMat next = DMat::Zero(small.dim, small.dim);
        for (int j = 0; j < cfg.n; ++j)
          next += DMat(small.S[j]) * cur * DMat(small.S[j]).adjoint();
        cur = next;
        worst = std::max(worst, operator_norm(cur) - nx);
      }
    }
    sink.add("relations/compression_contractive",
             "||sum_{|mu|=k} s_mu x s*_mu|| <= ||x||", std::max(worst, 0.0), 1e-10);
  }

  // Symbolic normal ordering against the raw matrix product.  A deeper
  // truncation keeps the interior of order 4 meaningful.
  {
    AlgebraConfig acfg{cfg.n, cfg.m, DeformVars::single_unimodular()};
    ExactCoeffs ring{acfg.vars};
    VarAssignment assign = VarAssignment::single(cfg.q0);
    Rep rep = build_fock_rep(cfg.n, cfg.m, cfg.N + 2, cfg.M + 2, cfg.q0, FockForm::A);
    Rand rnd(cfg.seed);
    double worst = 0.0;
    for (int t = 0; t < cfg.oracle_samples; ++t) {
      RawWord w = random_word(rnd, acfg, 4);
      Element x = normal_order_word(acfg, ring, w);
      SpMat lhs = evaluate(x, rep, assign);
      SpMat rhs = evaluate_raw(w, rep);
      worst = std::max(worst, residual_on_interior(SpMat(lhs - rhs), rep,
                                                   static_cast<int>(w.size())));
    }
    sink.add("relations/normal_order_oracle",
             "normal ordering agrees with the raw operator product", worst, 1e-10);
  }

  // Confluence: two rewrite strategies give identical normal forms.
  {
    AlgebraConfig acfg{cfg.n, cfg.m, DeformVars::single_unimodular()};
    ExactCoeffs ring{acfg.vars};
    Rand rnd(cfg.seed ^ 0xC0Fu);
    std::mt19937_64 strat_rng(cfg.seed ^ 0xFACEu);
    bool ok = true;
    for (int t = 0; t < cfg.confluence_samples && ok; ++t) {
      RawWord w = random_word(rnd, acfg, 10);
      Element det = normal_order_word(acfg, ring, w, Strategy::Deterministic);
      Element rndm = normal_order_word(acfg, ring, w, Strategy::Randomized, &strat_rng);
      ok = det == rndm;
    }
    sink.add_exact("relations/confluence",
                   "randomized and deterministic rewrites give one normal form", ok);

    // Generic mode as well (no block sorting).
    AlgebraConfig gcfg{cfg.n, cfg.m, DeformVars::single_generic()};
    ExactCoeffs gring{gcfg.vars};
    bool gok = true;
    for (int t = 0; t < cfg.confluence_samples / 5 && gok; ++t) {
      RawWord w = random_word(rnd, gcfg, 10);
      Element det = normal_order_word(gcfg, gring, w, Strategy::Deterministic);
      Element rndm = normal_order_word(gcfg, gring, w, Strategy::Randomized, &strat_rng);
      gok = det == rndm;
    }
    sink.add_exact("relations/confluence_generic",
                   "confluence holds without the block-sorting rules", gok);
  }

  // Wold classification of the standard models.
  {
    Rep fock = build_fock_rep(cfg.n, cfg.m, cfg.N, cfg.M, cfg.q0, FockForm::A);
    WoldReport wf = wold_classify(fock, cfg.q0, 2, 1e-10);
    sink.add_exact("relations/wold/fock", "the model with cyclic vacuum is pure type 1",
                   wf.h1 == wf.interior_dim && wf.unclassified() == 0);

    Cplx q3 = unit_phase(1.0 / 3.0);
    Rep clock = clock_shift_rep(3, q3);
    WoldReport wc = wold_classify(clock, q3, 2, 1e-10);
    sink.add_exact("relations/wold/unitary_pair",
                   "both range sums full means pure type 4",
                   wc.h4 == wc.interior_dim && wc.unclassified() == 0);

    Rep b2 = synthetic_block_rep(BlockKind::QFull_PFock, 6, q3);
    WoldReport w2 = wold_classify(b2, q3, 1, 1e-10);
    sink.add_exact("relations/wold/block_q",
                   "Q full and P of shift type means pure type 2",
                   w2.h2 == w2.interior_dim && w2.unclassified() == 0);

    Rep b3 = synthetic_block_rep(BlockKind::QFock_PFull, 6, q3);
    WoldReport w3 = wold_classify(b3, q3, 1, 1e-10);
    sink.add_exact("relations/wold/block_p",
                   "P full and Q of shift type means pure type 3",
                   w3.h3 == w3.interior_dim && w3.unclassified() == 0);

    Rep sum = direct_sum(clock, b2);
    WoldReport ws = wold_classify(sum, q3, 1, 1e-10);
    WoldReport wc1 = wold_classify(clock, q3, 1, 1e-10);
    sink.add_exact("relations/wold/direct_sum", "component dimensions add",
                   ws.h4 == wc1.h4 && ws.h2 == w2.h2 && ws.unclassified() == 0);
  }
}

// -----------------------------------------------------------------------
// untwist suite
// -----------------------------------------------------------------------

void suite_untwist(const SuiteConfig& cfg, CheckSink sink) {
  const std::vector<std::pair<std::string, Cplx>> qs = {
      {"q0", Cplx{0.0, 0.0}},
      {"q05", Cplx{0.5, 0.0}},
      {"q05t", 0.5 * unit_phase(0.2)}};
  for (const auto& [tag, q] : qs) {
    UntwistModel model = build_untwist(cfg.n, cfg.m, q, cfg.L);
    UntwistResiduals r = untwist_residuals(model, 2);
    std::string base = "untwist/" + tag;
    sink.add(base + "/w_isometry", "w*_r w_l = delta_rl", r.w_isometry, 1e-10);
    sink.add(base + "/vw_relation", "v*_i w_r = q w_r v*_i", r.vw_relation, 1e-10);
    sink.add(base + "/wt_recover", "(1 - Q) w_r = wt_r", r.wt_recover, 1e-10);
    sink.add(base + "/wtwt", "wt*_r wt_r = 1 - |q|^2 Q", r.wtwt, 1e-10);
    HatResiduals h = hat_residuals(model, 2);
    sink.add(base + "/hat_isometry", "that*_r that_l = delta_rl", h.isometry, 1e-10);
    sink.add(base + "/hat_orth", "v*_i that_r = 0", h.s_orth, 1e-10);
    sink.add(base + "/roundtrip", "rebuilding the free generators is the identity",
             roundtrip_deviation(model, 2), 1e-10);
    for (int N = 0; N <= 3; ++N)
      sink.add(base + "/partial_sum/N" + std::to_string(N),
               "sum_{k<=N} q^k s_mu ((1-Q)t_r) s*_mu telescopes",
               partial_sum_residual(model, 1, N, 2), 1e-12);
    sink.add_exact(base + "/series_terminates",
                   "series terms beyond the truncation vanish identically",
                   series_terminates(model));
    if (std::abs(q) == 0.0) {
      double dev = 0.0;
      for (int r2 = 1; r2 <= cfg.m; ++r2) {
        SpMat D = model.w[r2 - 1] - model.v(cfg.n + r2);
        dev = std::max(dev, residual_on_interior(D, model.free, 0));
      }
      sink.add(base + "/collapse", "at q = 0 the series collapses to w_r = v_{n+r}",
               dev, 0.0);
    }
  }
}

// -----------------------------------------------------------------------
// rieffel suite
// -----------------------------------------------------------------------

void suite_rieffel(const SuiteConfig& cfg, CheckSink sink) {
  const mpq_class phi0(3, 10);  // matches the default q0 = e^{2 pi i 0.3}
  const double phi0d = 0.3;
  AlgebraConfig acfg{cfg.n, cfg.m, DeformVars::single_unimodular()};
  ExactCoeffs ring{acfg.vars};

  {
    Eigen::Matrix2d th = theta_from_q(unit_phase(phi0d));
    double dev = std::abs(th(0, 1) - phi0d / 2) + std::abs(th(1, 0) + phi0d / 2) +
                 std::abs(th(0, 0)) + std::abs(th(1, 1));
    sink.add("rieffel/theta_matrix", "theta has off-diagonal +-phi0/2", dev, 1e-15);
    sink.add("rieffel/theta_skew", "theta + theta^T = 0",
             (th + th.transpose()).norm(), 0.0);
    sink.add("rieffel/theta_unit", "q = 1 gives the zero matrix",
             theta_from_q(Cplx{1.0, 0.0}).norm(), 0.0);
  }

  // Orientation pins from the degree-(1,0) x degree-(0,1) product.
  {
    GradedExact a = make_graded({1, 0}, parse_simple(acfg, {{s_letter(1), false}}));
    GradedExact b = make_graded({0, 1}, parse_simple(acfg, {{t_letter(1), false}}));
    GradedExact ab = twisted_mul(a, b, phi0);
    GradedExact ba = twisted_mul(b, a, phi0);
    sink.add_exact("rieffel/phase_forward", "deg (1,0) x (0,1) picks up e^{-i pi phi0}",
                   same_phase(ab.turns, -phi0 / 2));
    sink.add_exact("rieffel/phase_reverse", "deg (0,1) x (1,0) picks up e^{+i pi phi0}",
                   same_phase(ba.turns, phi0 / 2));
    // b a = e^{2 pi i phi0 p1 p2} a b with the payloads related by t1 s1 = q s1 t1
    sink.add_exact("rieffel/r_rel", "ba = e^{2 pi i phi0 p1 p2} ab",
                   same_phase(ba.turns - ab.turns, phi0));
    double numeric = std::abs(twist_phase(theta_from_q(unit_phase(phi0d)),
                                          {1, 0}, {0, 1}) -
                              std::polar(1.0, -std::numbers::pi * phi0d));
    sink.add("rieffel/phase_numeric", "numeric phase matches e^{-i pi phi0}", numeric,
             1e-15);
  }

  // Same-degree products are undeformed.
  {
    bool ok = true;
    for (int p = -3; p <= 3 && ok; ++p)
      for (int r = -3; r <= 3 && ok; ++r) {
        long long h = twist_height({p, r}, {p, r});
        long long hm = twist_height({p, r}, {-p, -r});
        ok = (h == 0 && hm == 0);
      }
    sink.add_exact("rieffel/same_degree", "<theta p, +-p> = 0", ok);
  }

  // Exhaustive bilinearity of the height form (associativity driver).
  {
    bool ok = true;
    for (int p1 = -10; p1 <= 10 && ok; ++p1)
      for (int p2 = -10; p2 <= 10 && ok; ++p2)
        for (int r1 = -10; r1 <= 10 && ok; ++r1)
          for (int r2 = -10; r2 <= 10 && ok; ++r2)
            for (int s1 = -10; s1 <= 10 && ok; ++s1)
              for (int s2 = -10; s2 <= 10 && ok; ++s2) {
                Eigen::Vector2i p{p1, p2}, r{r1, r2}, s{s1, s2};
                long long lhs = twist_height(p, r) + twist_height(p + r, s);
                long long rhs = twist_height(p, Eigen::Vector2i(r + s)) + twist_height(r, s);
                ok = lhs == rhs;
              }
    sink.add_exact("rieffel/bilinearity", "h(p,r) + h(p+r,s) = h(p,r+s) + h(r,s)", ok);
  }

  // Double deformation and associativity on random homogeneous elements.
  {
    Rand rnd(cfg.seed ^ 0x81EFull);
    auto random_graded = [&](Rand& rg) {
      Element x = random_element(rg, acfg, 2, 3);
      auto degs = x.degrees();
      if (degs.empty()) return make_graded({0, 0}, Element::unit(acfg, ring));
      auto d = degs[rg.upto(static_cast<int>(degs.size()))];
      return make_graded({d.first, d.second}, x.gauge_component(d));
    };
    bool dd_ok = true, assoc_ok = true, unit_ok = true;
    for (int t = 0; t < 100 && (dd_ok && assoc_ok && unit_ok); ++t) {
      GradedExact a = random_graded(rnd), b = random_graded(rnd), c = random_graded(rnd);
      // The twist phase of theta composed with the twist phase of -theta cancels,
      // so the doubly deformed product is the plain product.
      mpq_class e_plus = twisted_mul(a, b, phi0, +1).turns - a.turns - b.turns;
      mpq_class e_minus = twisted_mul(a, b, phi0, -1).turns - a.turns - b.turns;
      GradedExact plain{a.degree + b.degree, multiply(a.elem, b.elem),
                        a.turns + b.turns};
      dd_ok = dd_ok && same_phase(e_plus + e_minus, 0) &&
              twisted_mul(a, b, phi0, +1).elem == plain.elem;
      // Associativity: both parenthesizations give one phase and one payload.
      GradedExact ab = twisted_mul(a, b, phi0, +1);
      GradedExact bc = twisted_mul(b, c, phi0, +1);
      GradedExact left = twisted_mul(ab, c, phi0, +1);
      GradedExact right = twisted_mul(a, bc, phi0, +1);
      assoc_ok = assoc_ok && same_phase(left.turns, right.turns) &&
                 left.elem == right.elem;
      GradedExact unit = make_graded({0, 0}, Element::unit(acfg, ring));
      GradedExact au = twisted_mul(a, unit, phi0, +1);
      unit_ok = unit_ok && same_phase(au.turns, a.turns) && au.elem == a.elem;
    }
    sink.add_exact("rieffel/double_deform", "theta then -theta is the identity", dd_ok);
    sink.add_exact("rieffel/assoc", "the twisted product is associative", assoc_ok);
    sink.add_exact("rieffel/unit", "degree (0,0) unit is neutral", unit_ok);
  }

  // Deformation of the plain pair model reproduces the twisted model.
  {
    Rep plain = plain_pair_rep(cfg.n, cfg.m, cfg.N, cfg.M);
    BasisDegrees degs = pair_basis_degrees(cfg.n, cfg.N, cfg.m, cfg.M);
    Rep deformed = deform_rep(plain, degs, theta_from_q(cfg.q0));
    Rep direct = build_fock_rep(cfg.n, cfg.m, cfg.N, cfg.M, cfg.q0, FockForm::A);
    sink.add("rieffel/deform_rep", "column phases reproduce the twisted model",
             rep_deviation(deformed, direct), 1e-13);
    Rep undeformed = deform_rep(plain, degs, Eigen::Matrix2d::Zero());
    sink.add("rieffel/deform_rep_zero", "theta = 0 leaves the model unchanged",
             rep_deviation(undeformed, plain), 0.0);
  }

  // Crossed-product style untwisting.
  {
    CrossedUntwistResiduals r = crossed_untwist_check(cfg.n, cfg.m, cfg.q0, cfg.N, cfg.M);
    sink.add("rieffel/crossed/isometries", "shat, that are isometric families",
             r.isometries, 1e-13);
    sink.add("rieffel/crossed/st", "shat*_j that_r = q that_r shat*_j", r.cross_st, 1e-13);
    sink.add("rieffel/crossed/ts", "that_r shat_j = q shat_j that_r", r.cross_ts, 1e-13);
    sink.add("rieffel/crossed/u_comm", "u shat_j u* = e^{i pi phi0} shat_j", r.u_comm,
             1e-13);
    CrossedUntwistResiduals triv = crossed_untwist_check(cfg.n, cfg.m, {1.0, 0.0},
                                                         cfg.N, cfg.M);
    sink.add("rieffel/crossed/trivial", "q = 1 gives u = 1 and zero residuals",
             triv.max(), 0.0);
  }
}

// -----------------------------------------------------------------------
// ideals suite
// -----------------------------------------------------------------------

void suite_ideals(const SuiteConfig& cfg, CheckSink sink) {
  AlgebraConfig acfg{cfg.n, cfg.m, DeformVars::single_unimodular()};
  ExactCoeffs ring{acfg.vars};

  auto all_words = [&](int count, int maxlen, Letter::Family fam) {
    std::vector<Word> out;
    for (int len = 0; len <= maxlen; ++len) {
      auto w = words_of_length(count, len, fam);
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  };

  // Toeplitz matrix units for the S- and T-families.
  for (UnitKind kind : {UnitKind::S, UnitKind::T}) {
    int count = (kind == UnitKind::S) ? cfg.n : cfg.m;
    Letter::Family fam = (kind == UnitKind::S) ? Letter::S : Letter::T;
    auto words = all_words(count, 2, fam);
    bool ok = true;
    for (const Word& mu1 : words)
      for (const Word& nu1 : words) {
        Element e1 = matrix_unit_toeplitz(acfg, kind, mu1, nu1);
        if (!(e1.adjoint() == matrix_unit_toeplitz(acfg, kind, nu1, mu1))) ok = false;
        for (const Word& mu2 : words) {
          if (!ok) break;
          // sample the second column index to keep the product count modest
          const Word& nu2 = mu1;
          Element prod = multiply(e1, matrix_unit_toeplitz(acfg, kind, mu2, nu2));
          Element expect = (nu1 == mu2) ? matrix_unit_toeplitz(acfg, kind, mu1, nu2)
                                        : Element::zero(acfg, ring);
          if (!(prod == expect)) ok = false;
        }
        if (!ok) break;
      }
    sink.add_exact(std::string("ideals/matrix_units_") +
                       (kind == UnitKind::S ? "S" : "T"),
                   "E_{mu nu} E_{mu' nu'} = delta_{nu mu'} E_{mu nu'}", ok);
  }

  {
    Element e0 = matrix_unit_toeplitz(acfg, UnitKind::S, {}, {});
    bool ok = multiply(e0, e0) == e0 && e0.adjoint() == e0;
    sink.add_exact("ideals/unit_projection", "E_{empty,empty} = 1 - Q is a projection", ok);
  }

  // Commutation phase against compact corners:
  // E_{mu1 nu1} t_mu2 t*_nu2 = q^{(|nu1|-|mu1|)(|mu2|-|nu2|)} t_mu2 t*_nu2 E_{mu1 nu1}.
  {
    auto s_words = all_words(cfg.n, 2, Letter::S);
    auto t_words = all_words(cfg.m, 2, Letter::T);
    bool ok = true;
    for (const Word& mu1 : s_words) {
      for (const Word& nu1 : s_words) {
        Element E = matrix_unit_toeplitz(acfg, UnitKind::S, mu1, nu1);
        for (const Word& mu2 : t_words) {
          for (const Word& nu2 : t_words) {
            if (!ok) break;
            Monomial tt;
            tt.creation = mu2;
            tt.annihilation = nu2;
            Element corner = Element::monomial(acfg, ring, tt, ring.one());
            int expo = (static_cast<int>(nu1.size()) - static_cast<int>(mu1.size())) *
                       (static_cast<int>(mu2.size()) - static_cast<int>(nu2.size()));
            Element lhs = multiply(E, corner);
            Element rhs = multiply(corner, E).scaled(PhaseCoeff::q_power(acfg.vars, expo));
            if (!(lhs == rhs)) ok = false;
          }
          if (!ok) break;
        }
      }
    }
    sink.add_exact("ideals/commutation_phase",
                   "E_{mu1 nu1} t_mu2 t*_nu2 = q^{(|nu1|-|mu1|)(|mu2|-|nu2|)} "
                   "t_mu2 t*_nu2 E_{mu1 nu1}",
                   ok);
  }

  // Ideal membership of the generating projections.
  {
    Element one = Element::unit(acfg, ring);
    Element oneQ = matrix_unit_toeplitz(acfg, UnitKind::S, {}, {});  // 1 - Q
    Element oneP = matrix_unit_toeplitz(acfg, UnitKind::T, {}, {});  // 1 - P
    Element prod = multiply(oneQ, oneP);

    IdealFlags f1 = ideal_membership(prod);
    sink.add_exact("ideals/membership/corner", "(1-Q)(1-P) lies in all four ideals",
                   f1.in_Iq && f1.in_I1 && f1.in_I2 && f1.in_Mq);
    IdealFlags f2 = ideal_membership(oneQ);
    sink.add_exact("ideals/membership/one_minus_Q",
                   "1-Q lies in the s-side and largest ideals only",
                   f2.in_I1 && f2.in_Mq && !f2.in_I2 && !f2.in_Iq);
    IdealFlags f3 = ideal_membership(oneP);
    sink.add_exact("ideals/membership/one_minus_P",
                   "1-P lies in the t-side and largest ideals only",
                   f3.in_I2 && f3.in_Mq && !f3.in_I1 && !f3.in_Iq);
    Element s1 = parse_simple(acfg, {{s_letter(1), false}});
    IdealFlags f4 = ideal_membership(s1);
    sink.add_exact("ideals/membership/generator", "s_1 lies in no proper ideal",
                   !f4.in_I1 && !f4.in_I2 && !f4.in_Mq && !f4.in_Iq);
    (void)one;

    Rand rnd(cfg.seed ^ 0x1dea1u);
    bool mono = true;
    for (int t = 0; t < 25 && mono; ++t) {
      Element x = random_element(rnd, acfg, 2, 4);
      IdealFlags f = ideal_membership(x);
      mono = (!f.in_Iq || (f.in_I1 && f.in_I2)) && (!f.in_I1 || f.in_Mq) &&
             (!f.in_I2 || f.in_Mq);
    }
    sink.add_exact("ideals/membership/monotone",
                   "membership flags respect the ideal inclusions", mono);
  }

  // Quotient-level matrix units at profiles (1,1) and (2,1).
  for (auto [k, l] : {std::pair<int, int>{1, 1}, std::pair<int, int>{2, 1}}) {
    auto s_words = words_of_length(cfg.n, k, Letter::S);
    auto t_words = words_of_length(cfg.m, l, Letter::T);
    bool ok = true;
    struct Idx {
      const Word *mu, *mup;
    };
    std::vector<Idx> idx;
    for (const auto& mu : s_words)
      for (const auto& mup : t_words) idx.push_back({&mu, &mup});
    for (size_t a = 0; a < idx.size() && ok; ++a) {
      for (size_t b = 0; b < idx.size() && ok; ++b) {
        for (size_t c = 0; c < idx.size() && ok; ++c) {
          // e_{A,B} e_{B',C} = delta e_{A,C}; sample B' = B or shifted
          size_t bp = (b + c) % idx.size();
          Element eab = level_matrix_unit(acfg, *idx[a].mu, *idx[a].mup, *idx[b].mup,
                                          *idx[b].mu);
          Element ebc = level_matrix_unit(acfg, *idx[bp].mu, *idx[bp].mup, *idx[c].mup,
                                          *idx[c].mu);
          Element prod = multiply(eab, ebc);
          Element expect = (bp == b)
                               ? level_matrix_unit(acfg, *idx[a].mu, *idx[a].mup,
                                                   *idx[c].mup, *idx[c].mu)
                               : Element::zero(acfg, ring);
          if (!(prod == expect)) ok = false;
        }
      }
    }
    sink.add_exact("ideals/level_units_F" + std::to_string(k) + std::to_string(l),
                   "the balanced profile space is a matrix-unit algebra", ok);
  }

  // Raising and absorption.
  {
    Element ss = parse_simple(acfg, {{s_letter(1), false}, {s_letter(1), true}});
    Element raised = raise_profile(ss, Profile{2, 0, 0, 2});
    bool shape_ok = raised.size() == static_cast<size_t>(cfg.n);
    sink.add_exact("ideals/raise/insert",
                   "raising s1 s1* inserts the level-1 range sum", shape_ok);
    Element one = Element::unit(acfg, ring);
    Element raised1 = raise_profile(one, Profile{1, 1, 1, 1});
    sink.add_exact("ideals/raise/unit",
                   "1 raises to the sum of the level-(1,1) projections",
                   raised1.size() == static_cast<size_t>(cfg.n * cfg.m));
    Element range_sum(acfg, ring);
    for (int j = 1; j <= cfg.n; ++j) {
      Monomial mono;
      mono.creation = {s_letter(j)};
      mono.annihilation = {s_letter(j)};
      range_sum.add_term(mono, ring.one());
    }
    sink.add_exact("ideals/quotient/unit", "1 equals the range sum in the quotient",
                   quotient_equal(one, range_sum));
    Element s1s1 = parse_simple(acfg, {{s_letter(1), false}, {s_letter(1), true}});
    sink.add_exact("ideals/quotient/proper",
                   "a proper range projection is not the unit",
                   !quotient_equal(s1s1, one));

    Rand rnd(cfg.seed ^ 0xAB5u);
    bool idem = true, absorb = true;
    for (int t = 0; t < 30 && (idem || absorb); ++t) {
      NumElement x = random_level11(rnd, acfg, VarAssignment::single(cfg.q0));
      NumElement once = raise_profile(x, Profile{2, 2, 2, 2});
      NumElement twice = raise_profile(raise_profile(x, Profile{1, 2, 2, 1}),
                                       Profile{2, 2, 2, 2});
      if (max_abs_diff(once, twice) > 1e-12) idem = false;
      if (quotient_max_dev(once, x) > 1e-12) absorb = false;
    }
    sink.add_exact("ideals/raise/idempotent", "raising twice equals raising once", idem);
    sink.add_exact("ideals/raise/absorption",
                   "raised elements stay equal in the quotient", absorb);
  }

  // Matrix realization: *-isomorphism onto a full matrix algebra.
  {
    Rand rnd(cfg.seed ^ 0x7031u);
    VarAssignment assign = VarAssignment::single(cfg.q0);
    NumericCoeffs nring{acfg.vars, assign};
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      NumElement x = random_level11(rnd, acfg, assign);
      NumElement y = random_level11(rnd, acfg, assign);
      DMat mx = to_matrix(x, 1, 1), my = to_matrix(y, 1, 1);
      DMat mxy = to_matrix(multiply(x, y), 1, 1);
      worst = std::max(worst, (mxy - mx * my).cwiseAbs().maxCoeff());
      worst = std::max(worst,
                       (to_matrix(x.adjoint(), 1, 1) - DMat(mx.adjoint())).cwiseAbs().maxCoeff());
      NumElement back = from_matrix(acfg, assign, mx, 1, 1);
      worst = std::max(worst, quotient_max_dev(back, x));
    }
    sink.add("ideals/to_matrix", "the level map is a *-isomorphism", worst, 1e-12);
    NumElement one = NumElement::unit(acfg, nring);
    DMat mone = to_matrix(one, 1, 1);
    sink.add("ideals/to_matrix_unit", "the unit maps to the identity matrix",
             (mone - DMat::Identity(mone.rows(), mone.cols())).cwiseAbs().maxCoeff(),
             0.0);
  }
}

// -----------------------------------------------------------------------
// expectations suite
// -----------------------------------------------------------------------

void suite_expectations(const SuiteConfig& cfg, CheckSink sink) {
  AlgebraConfig acfg{cfg.n, cfg.m, DeformVars::single_unimodular()};
  ExactCoeffs ring{acfg.vars};
  Rand rnd(cfg.seed ^ 0xE49u);

  {
    bool idem = true, commute = true, partition = true;
    for (int t = 0; t < 40; ++t) {
      Element x = random_element(rnd, acfg, 3, 5);
      Element p1 = x.expectation(Expect::Phi1);
      Element p2 = x.expectation(Expect::Phi2);
      Element p = x.expectation(Expect::Phi);
      if (!(p1.expectation(Expect::Phi1) == p1)) idem = false;
      if (!(p2.expectation(Expect::Phi2) == p2)) idem = false;
      if (!(p.expectation(Expect::Phi) == p)) idem = false;
      if (!(p1.expectation(Expect::Phi2) == p) || !(p2.expectation(Expect::Phi1) == p))
        commute = false;
      Element sum = Element::zero(acfg, ring);
      for (auto d : x.degrees()) sum = sum + x.gauge_component(d);
      if (!(sum == x)) partition = false;
    }
    sink.add_exact("expectations/idempotent", "phi1, phi2, phi are projections", idem);
    sink.add_exact("expectations/commute", "phi1 phi2 = phi2 phi1 = phi", commute);
    sink.add_exact("expectations/gauge_partition",
                   "the homogeneous components sum back to the element", partition);
  }

  {
    Element s1 = parse_simple(acfg, {{s_letter(1), false}});
    sink.add_exact("expectations/kills_unbalanced", "phi(s_1) = 0",
                   s1.expectation(Expect::Phi).is_zero());
    Element bal = parse_simple(acfg, {{s_letter(1), false},
                                      {t_letter(1), false},
                                      {t_letter(1), true},
                                      {s_letter(1), true}});
    sink.add_exact("expectations/keeps_balanced", "phi fixes balanced words",
                   bal.expectation(Expect::Phi) == bal);
    Element mixed = parse_simple(acfg, {{s_letter(1), false},
                                        {t_letter(2), false},
                                        {s_letter(2), true}});
    sink.add_exact("expectations/phi1_keeps_t_unbalanced",
                   "phi1 keeps s-balanced, t-unbalanced words",
                   mixed.expectation(Expect::Phi1) == mixed);
  }

  {
    bool module_ok = true;
    for (int t = 0; t < 20 && module_ok; ++t) {
      Element x = random_element(rnd, acfg, 2, 4);
      Element a = random_element(rnd, acfg, 2, 4).expectation(Expect::Phi);
      Element b = random_element(rnd, acfg, 2, 4).expectation(Expect::Phi);
      Element lhs = multiply(multiply(a, x), b).expectation(Expect::Phi);
      Element rhs = multiply(multiply(a, x.expectation(Expect::Phi)), b);
      module_ok = lhs == rhs;
    }
    sink.add_exact("expectations/module",
                   "phi(a x b) = a phi(x) b for balanced a, b", module_ok);
  }

  // Automorphism families.
  {
    Element t2 = parse_simple(acfg, {{t_letter(2), false}});
    Element s1 = parse_simple(acfg, {{s_letter(1), false}});
    bool ok = t2.apply_aut(AutAlpha{1}) == t2.scaled(PhaseCoeff::q_power(acfg.vars, 1)) &&
              s1.apply_aut(AutAlpha{1}) == s1 &&
              s1.apply_aut(AutBeta{2}) == s1.scaled(PhaseCoeff::q_power(acfg.vars, -2));
    Element word = parse_simple(acfg, {{s_letter(1), false},
                                       {t_letter(1), false},
                                       {s_letter(2), true}});
    ok = ok && word.apply_aut(AutBeta{2}) == word;  // s-balanced: net exponent zero
    bool hom = true;
    for (int t = 0; t < 15 && hom; ++t) {
      Element x = random_element(rnd, acfg, 2, 3);
      Element y = random_element(rnd, acfg, 2, 3);
      for (AutSpec spec : {AutSpec(AutAlpha{2}), AutSpec(AutBeta{1}),
                           AutSpec(AutGauge{1, -1})}) {
        if (!(multiply(x, y).apply_aut(spec) ==
              multiply(x.apply_aut(spec), y.apply_aut(spec))))
          hom = false;
      }
    }
    sink.add_exact("expectations/aut_values",
                   "alpha scales t-letters, beta scales s-letters", ok);
    sink.add_exact("expectations/aut_homomorphism",
                   "the automorphism families are multiplicative", hom);
  }

  // Gauge averaging over K x K phases against the symbolic expectation.
  {
    Rep rep = build_fock_rep(cfg.n, cfg.m, cfg.N, cfg.M, cfg.q0, FockForm::A);
    VarAssignment assign = VarAssignment::single(cfg.q0);
    const int K = 8;
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      Element x = random_element(rnd, acfg, 3, 3);
      SpMat avg(rep.dim, rep.dim);
      for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b) {
          Rep scaled = gauge_scaled(rep, unit_phase(double(a) / K),
                                    unit_phase(double(b) / K));
          avg = avg + evaluate(x, scaled, assign);
        }
      avg = SpMat(avg * Cplx{1.0 / (K * K), 0.0});
      SpMat direct = evaluate(x.expectation(Expect::Phi), rep, assign);
      worst = std::max(worst, residual_on_interior(SpMat(avg - direct), rep, 3));
    }
    sink.add("expectations/gauge_average",
             "averaging the gauge orbit realizes the expectation", worst, 1e-10);
  }

  // The implementing isometry.
  for (auto [k, l] : {std::pair<int, int>{1, 1}, std::pair<int, int>{2, 1},
                      std::pair<int, int>{1, 2}, std::pair<int, int>{2, 2}}) {
    Element w = implementing_isometry(acfg, k, l);
    Element one = Element::unit(acfg, ring);
    std::string base = "expectations/w" + std::to_string(k) + std::to_string(l);
    sink.add_exact(base + "/isometry", "w*w = 1 in the quotient",
                   quotient_equal(multiply(w.adjoint(), w), one));

    // w commutes with the balanced profile space: check on matrix units.
    bool comm = true;
    auto s_words = words_of_length(cfg.n, k, Letter::S);
    auto t_words = words_of_length(cfg.m, l, Letter::T);
    int checked = 0;
    for (size_t a = 0; a < s_words.size() && comm; ++a)
      for (size_t b = 0; b < t_words.size() && comm; ++b) {
        Element unit = level_matrix_unit(acfg, s_words[a], t_words[b],
                                         t_words[(b + 1) % t_words.size()],
                                         s_words[(a + 1) % s_words.size()]);
        if (!(multiply(w, unit) == multiply(unit, w))) comm = false;
        if (++checked >= 8) break;
      }
    sink.add_exact(base + "/commutes", "w commutes with the balanced profile space",
                   comm);

    if (k == 1 && l == 1) {
      Element y = parse_simple(acfg, {{s_letter(1), false},
                                      {t_letter(1), false},
                                      {t_letter(1), true},
                                      {s_letter(1), true}});
      bool compress = quotient_equal(multiply(multiply(w.adjoint(), y), w),
                                     y.expectation(Expect::Phi));
      Element s1 = parse_simple(acfg, {{s_letter(1), false}});
      bool kills = quotient_is_zero(multiply(multiply(w.adjoint(), s1), w));
      sink.add_exact(base + "/compress", "w* y w = phi(y) on short words",
                     compress && kills);
    }
  }
}

// -----------------------------------------------------------------------
// witness suite
// -----------------------------------------------------------------------

void suite_witness(const SuiteConfig& cfg, CheckSink sink) {
  AlgebraConfig acfg{cfg.n, cfg.m, DeformVars::single_unimodular()};
  VarAssignment assign = VarAssignment::single(cfg.q0);
  NumericCoeffs nring{acfg.vars, assign};

  {
    NumElement one = NumElement::unit(acfg, nring);
    WitnessResult w = pure_infinite_witness(one);
    sink.add("witness/unit", "a x b = 1 for x = 1", w.residual, 1e-8);
  }
  {
    NumElement proj(acfg, nring);
    Monomial mono;
    mono.creation = {s_letter(1)};
    mono.annihilation = {s_letter(1)};
    proj.add_term(mono, Cplx{1.0, 0.0});
    WitnessResult w = pure_infinite_witness(proj);
    sink.add("witness/projection", "a x b = 1 for the range projection s1 s1*",
             w.residual, 1e-8);
  }
  {
    Rand rnd(cfg.seed);
    for (int t = 0; t < cfg.witness_samples; ++t) {
      NumElement x = random_level11(rnd, acfg, assign);
      WitnessResult w = pure_infinite_witness(x);
      char id[64];
      std::snprintf(id, sizeof(id), "witness/random/%02d", t);
      sink.add(id, "a x b = 1 for a random balanced element", w.residual, 1e-8);
    }
  }
}

// -----------------------------------------------------------------------
// ktable suite
// -----------------------------------------------------------------------

void suite_ktable(const SuiteConfig& cfg, CheckSink sink) {
  bool agree = true;
  for (int n = 2; n <= 30 && agree; ++n)
    for (int m = 2; m <= 30 && agree; ++m) {
      KTable t = k_table(n, m);
      agree = t.routes_agree;
    }
  sink.add_exact("ktable/routes_agree",
                 "six-term and Kunneth routes agree for 2 <= n, m <= 30", agree);

  {
    KTable t = k_table(3, 5);
    bool ok = t.d == 2 && t.k0_OnOm == FgAbGroup::cyclic(2) &&
              t.k1_OnOm == FgAbGroup::cyclic(2) &&
              t.k0_Mq == direct_sum(FgAbGroup::cyclic(2), FgAbGroup::free(1)) &&
              t.k1_Mq == FgAbGroup::zero() && t.kk1_order == 8;
    sink.add_exact("ktable/pin_3_5",
                   "d = 2, K-groups Z/2, torsion + Z for the largest ideal, order 8",
                   ok);
  }
  {
    bool ok = true;
    for (int m = 2; m <= 10 && ok; ++m) {
      KTable t = k_table(2, m);
      ok = t.d == 1 && t.ext_trivial && t.k0_OnOm.is_zero() && t.k1_OnOm.is_zero();
    }
    KTable t34 = k_table(3, 4);
    ok = ok && t34.ext_trivial;
    sink.add_exact("ktable/coprime", "d = 1 forces the trivial obstruction group", ok);
  }
  {
    bool ok = true;
    for (int n = 2; n <= 12 && ok; ++n) {
      KTable t = k_table(n, n);
      ok = t.k1_OnOm == FgAbGroup::cyclic(n - 1);
    }
    sink.add_exact("ktable/diagonal",
                   "n = m: the kernel of multiplication by (m-1) is everything", ok);
  }
  {
    KTable t = k_table(cfg.n, cfg.m);
    sink.add_exact("ktable/toeplitz_level", "the Toeplitz-level groups are Z and 0",
                   t.k0_E == FgAbGroup::free(1) && t.k1_E.is_zero());
  }
}

// -----------------------------------------------------------------------
// wick suite
// -----------------------------------------------------------------------

void suite_wick(const SuiteConfig& cfg, CheckSink sink) {
  (void)cfg;
  const std::vector<std::pair<std::string, Cplx>> qs = {
      {"q05", Cplx{0.5, 0.0}}, {"q03", unit_phase(0.3)}};
  for (auto [n, m] : {std::pair<int, int>{1, 1}, std::pair<int, int>{2, 2}}) {
    for (const auto& [tag, q] : qs) {
      DMat T = wick_T(n, m, q);
      std::string base = "wick/n" + std::to_string(n) + "m" + std::to_string(m) + "/" + tag;
      sink.add(base + "/norm", "||T|| = |q|", std::abs(operator_norm(T) - std::abs(q)),
               1e-12);
      sink.add(base + "/braid",
               "(1xT)(Tx1)(1xT) = (Tx1)(1xT)(Tx1)", braid_residual(T, n + m), 1e-12);
    }
  }
  {
    DMat T = wick_T(2, 2, Cplx{0.0, 0.0});
    sink.add("wick/zero", "q = 0 gives T = 0 and zero braid residual",
             operator_norm(T) + braid_residual(T, 4), 0.0);
  }
  {
    DMat T = wick_T(1, 1, Cplx{0.5, 0.0});
    double dev = std::abs(T(1 * 2 + 0, 0 * 2 + 1) - Cplx{0.5, 0.0}) +
                 std::abs(T(0 * 2 + 1, 1 * 2 + 0) - Cplx{0.5, 0.0});
    DMat zeroed = T;
    zeroed(1 * 2 + 0, 0 * 2 + 1) = 0;
    zeroed(0 * 2 + 1, 1 * 2 + 0) = 0;
    sink.add("wick/action", "T flips mixed simple tensors and kills the rest",
             dev + zeroed.cwiseAbs().maxCoeff(), 0.0);
  }
}

}  // namespace

int SuiteResult::failures() const {
  int f = 0;
  for (const auto& c : checks)
    if (!c.pass) ++f;
  return f;
}

std::vector<std::string> suite_names() {
  return {"relations", "untwist", "rieffel", "ideals", "expectations",
          "witness",   "ktable",  "wick",    "all"};
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  SuiteResult result;
  result.suite = name;
  result.config = cfg;
  CheckSink sink{&result.checks};
  if (name == "relations") {
    suite_relations(cfg, sink);
  } else if (name == "untwist") {
    suite_untwist(cfg, sink);
  } else if (name == "rieffel") {
    suite_rieffel(cfg, sink);
  } else if (name == "ideals") {
    suite_ideals(cfg, sink);
  } else if (name == "expectations") {
    suite_expectations(cfg, sink);
  } else if (name == "witness") {
    suite_witness(cfg, sink);
  } else if (name == "ktable") {
    suite_ktable(cfg, sink);
  } else if (name == "wick") {
    suite_wick(cfg, sink);
  } else if (name == "all") {
    suite_relations(cfg, sink);
    suite_untwist(cfg, sink);
    suite_rieffel(cfg, sink);
    suite_ideals(cfg, sink);
    suite_expectations(cfg, sink);
    suite_witness(cfg, sink);
    suite_ktable(cfg, sink);
    suite_wick(cfg, sink);
  } else {
    throw ConfigError("unknown suite: " + name);
  }
  std::sort(result.checks.begin(), result.checks.end(),
            [](const SuiteCheck& a, const SuiteCheck& b) { return a.id < b.id; });
  return result;
}

std::string suite_report_json(const SuiteResult& result) {
  nlohmann::ordered_json j;
  j["suite"] = result.suite;
  nlohmann::ordered_json conf;
  conf["n"] = result.config.n;
  conf["m"] = result.config.m;
  conf["N"] = result.config.N;
  conf["M"] = result.config.M;
  conf["L"] = result.config.L;
  conf["q"] = {{"re", result.config.q0.real()}, {"im", result.config.q0.imag()}};
  conf["tol"] = result.config.tol;
  conf["seed"] = result.config.seed;
  conf["oracle_samples"] = result.config.oracle_samples;
  conf["confluence_samples"] = result.config.confluence_samples;
  conf["witness_samples"] = result.config.witness_samples;
  if (result.config.theta) {
    nlohmann::ordered_json th = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < result.config.theta->rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index k = 0; k < result.config.theta->cols(); ++k)
        row.push_back({{"re", (*result.config.theta)(i, k).real()},
                       {"im", (*result.config.theta)(i, k).imag()}});
      th.push_back(std::move(row));
    }
    conf["theta"] = std::move(th);
  }
  j["config"] = std::move(conf);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : result.checks) {
    checks.push_back({{"id", c.id},
                      {"anchor", c.anchor},
                      {"residual", c.residual},
                      {"tol", c.tol},
                      {"pass", c.pass}});
  }
  j["checks"] = std::move(checks);
  return j.dump(2);
}

SuiteConfig suite_config_from_json(const std::string& text) {
  SuiteConfig cfg;
  if (text.empty()) return cfg;
  nlohmann::json j = nlohmann::json::parse(text);
  cfg.n = j.value("n", cfg.n);
  cfg.m = j.value("m", cfg.m);
  cfg.N = j.value("N", cfg.N);
  cfg.M = j.value("M", cfg.M);
  cfg.L = j.value("L", cfg.L);
  cfg.tol = j.value("tol", cfg.tol);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.oracle_samples = j.value("oracle_samples", cfg.oracle_samples);
  cfg.confluence_samples = j.value("confluence_samples", cfg.confluence_samples);
  cfg.witness_samples = j.value("witness_samples", cfg.witness_samples);
  if (j.contains("q")) {
    const auto& q = j["q"];
    if (q.is_number()) {
      cfg.q0 = Cplx{q.get<double>(), 0.0};
    } else if (q.contains("turns")) {
      cfg.q0 = unit_phase(q["turns"].get<double>());
    } else {
      cfg.q0 = Cplx{q.value("re", 1.0), q.value("im", 0.0)};
    }
  }
  if (j.contains("theta")) {
    const auto& th = j["theta"];
    Eigen::MatrixXcd mat(cfg.n, cfg.m);
    for (int i = 0; i < cfg.n; ++i)
      for (int k = 0; k < cfg.m; ++k) {
        const auto& cell = th.at(i).at(k);
        if (cell.is_number())
          mat(i, k) = unit_phase(cell.get<double>());
        else
          mat(i, k) = Cplx{cell.value("re", 1.0), cell.value("im", 0.0)};
      }
    cfg.theta = mat;
  }
  return cfg;
}

}  // namespace qcuntz
