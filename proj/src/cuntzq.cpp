#include "qcuntz/core/cuntzq.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>

namespace qcuntz {

Profile profile_of(const Monomial& mono) {
  auto b = mono.block_lengths();
  return Profile{b[0], b[1], b[2], b[3]};
}

std::vector<Word> words_of_length(int k, int len, Letter::Family family) {
  std::vector<Word> out;
  Eigen::Index count = 1;
  for (int t = 0; t < len; ++t) count *= k;
  out.reserve(count);
  for (Eigen::Index idx = 0; idx < count; ++idx) {
    Word w(len);
    Eigen::Index v = idx;
    for (int p = len - 1; p >= 0; --p) {
      w[p] = Letter{family, static_cast<int>(v % k) + 1};
      v /= k;
    }
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

void require_unimodular_mode(const AlgebraConfig& cfg) {
  if (!cfg.vars.unimodular())
    throw ConfigError("quotient operations require a unimodular deformation mode");
}

// The monomial must be in normal block form s_mu t_mu' t*_nu' s*_nu.
void require_block_form(const Monomial& mono) {
  auto sorted = [](const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].family == Letter::T && w[i + 1].family == Letter::S) return false;
    return true;
  };
  if (!sorted(mono.creation) || !sorted(mono.annihilation))
    throw ConfigError("monomial not in block normal form");
}

}  // namespace

template <class R>
BasicElement<R> raise_profile(const BasicElement<R>& x, Profile target,
                              QuotientKind kind) {
  const AlgebraConfig& cfg = x.config();
  require_unimodular_mode(cfg);
  std::vector<RawTerm<R>> input;
  for (const auto& [mono, coeff] : x.terms()) {
    require_block_form(mono);
    Profile p = profile_of(mono);
    if (!target.dominates(p)) throw ConfigError("target profile does not dominate " + p.str());
    int ds = target.a - p.a;
    int dt = target.b - p.b;
    if (target.d - p.d != ds || target.c - p.c != dt)
      throw ConfigError("target profile incompatible with the degree of " + mono.str());
    if (kind == QuotientKind::SOnly && dt != 0)
      throw ConfigError("t-side raising unavailable in the s-only quotient");
    if (kind == QuotientKind::TOnly && ds != 0)
      throw ConfigError("s-side raising unavailable in the t-only quotient");

    RawWord head, tail;
    for (Letter l : mono.creation) head.push_back({l, false});
    for (auto it = mono.annihilation.rbegin(); it != mono.annihilation.rend(); ++it)
      tail.push_back({*it, true});

    // Insert sum over |delta| = ds, |eps'| = dt of s_delta t_eps' t*_eps' s*_delta.
    auto deltas = words_of_length(cfg.n, ds, Letter::S);
    auto epsilons = words_of_length(cfg.m, dt, Letter::T);
    for (const Word& delta : deltas) {
      for (const Word& eps : epsilons) {
        RawWord w = head;
        for (Letter l : delta) w.push_back({l, false});
        for (Letter l : eps) w.push_back({l, false});
        for (auto it = eps.rbegin(); it != eps.rend(); ++it) w.push_back({*it, true});
        for (auto it = delta.rbegin(); it != delta.rend(); ++it) w.push_back({*it, true});
        w.insert(w.end(), tail.begin(), tail.end());
        input.push_back({coeff, std::move(w)});
      }
    }
  }
  return normal_order<R>(cfg, x.ring(), input);
}

template <class R>
BasicElement<R> quotient_canonical(const BasicElement<R>& x, QuotientKind kind) {
  require_unimodular_mode(x.config());
  // Componentwise maximal profile per graded component.
  std::map<std::pair<int, int>, Profile> targets;
  for (const auto& [mono, coeff] : x.terms()) {
    Profile p = profile_of(mono);
    auto deg = p.degree();
    auto [it, fresh] = targets.emplace(deg, p);
    if (!fresh) {
      // a - d and b - c are constant within a component, so the componentwise
      // max keeps the degree consistent.
      Profile& t = it->second;
      t.a = std::max(t.a, p.a);
      t.b = std::max(t.b, p.b);
      t.c = std::max(t.c, p.c);
      t.d = std::max(t.d, p.d);
    }
  }
  if (kind == QuotientKind::SOnly)
    for (auto& [deg, t] : targets) {
      // t-side lengths stay at their maxima without insertion; recompute so the
      // target dominates every monomial without t-raising
      t.b = 0;
      t.c = 0;
    }
  if (kind == QuotientKind::TOnly)
    for (auto& [deg, t] : targets) {
      t.a = 0;
      t.d = 0;
    }
  // For one-sided quotients the untouched side keeps each monomial's own
  // lengths; raise componentwise per monomial instead of per component.
  BasicElement<R> out(x.config(), x.ring());
  for (const auto& [mono, coeff] : x.terms()) {
    Profile p = profile_of(mono);
    Profile t = targets.at(p.degree());
    Profile target = p;
    if (kind != QuotientKind::TOnly) {
      target.a = t.a;
      target.d = t.d;
    }
    if (kind != QuotientKind::SOnly) {
      target.b = t.b;
      target.c = t.c;
    }
    BasicElement<R> single(x.config(), x.ring());
    single.add_term(mono, coeff);
    out = out + raise_profile(single, target, kind);
  }
  return out;
}

template Element raise_profile<ExactCoeffs>(const Element&, Profile, QuotientKind);
template NumElement raise_profile<NumericCoeffs>(const NumElement&, Profile, QuotientKind);
template Element quotient_canonical<ExactCoeffs>(const Element&, QuotientKind);
template NumElement quotient_canonical<NumericCoeffs>(const NumElement&, QuotientKind);

bool quotient_is_zero(const Element& x, QuotientKind kind) {
  return quotient_canonical(x, kind).is_zero();
}

bool quotient_equal(const Element& x, const Element& y, QuotientKind kind) {
  return quotient_is_zero(x - y, kind);
}

double quotient_norm(const NumElement& x) {
  return max_abs_coeff(quotient_canonical(x));
}

double quotient_max_dev(const NumElement& x, const NumElement& y) {
  return quotient_norm(x - y);
}

// ---------------------------------------------------------------------------

namespace {

Eigen::Index pair_word_index(const AlgebraConfig& cfg, const Word& mu, const Word& mup) {
  Eigen::Index ms = 0;
  for (Letter l : mu) ms = ms * cfg.n + (l.index - 1);
  Eigen::Index mt = 0, tcount = 1;
  for (Letter l : mup) {
    mt = mt * cfg.m + (l.index - 1);
    tcount *= cfg.m;
  }
  return ms * tcount + mt;
}

}  // namespace

Eigen::MatrixXcd to_matrix(const NumElement& x, int k, int l) {
  const AlgebraConfig& cfg = x.config();
  Eigen::Index dim = 1;
  for (int t = 0; t < k; ++t) dim *= cfg.n;
  for (int t = 0; t < l; ++t) dim *= cfg.m;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  NumElement raised = raise_profile(x, Profile{k, l, l, k});
  for (const auto& [mono, c] : raised.terms()) {
    Profile p = profile_of(mono);
    if (p.degree() != std::pair<int, int>{0, 0})
      throw ConfigError("to_matrix requires a degree-(0,0) element");
    Word mu(mono.creation.begin(), mono.creation.begin() + p.a);
    Word mup(mono.creation.begin() + p.a, mono.creation.end());
    Word nu(mono.annihilation.begin(), mono.annihilation.begin() + p.d);
    Word nup(mono.annihilation.begin() + p.d, mono.annihilation.end());
    M(pair_word_index(cfg, mu, mup), pair_word_index(cfg, nu, nup)) += c;
  }
  return M;
}

NumElement from_matrix(const AlgebraConfig& cfg, const VarAssignment& a,
                       const Eigen::MatrixXcd& M, int k, int l) {
  NumericCoeffs ring{cfg.vars, a};
  NumElement out(cfg, ring);
  auto s_words = words_of_length(cfg.n, k, Letter::S);
  auto t_words = words_of_length(cfg.m, l, Letter::T);
  Eigen::Index dim = static_cast<Eigen::Index>(s_words.size() * t_words.size());
  if (M.rows() != dim || M.cols() != dim) throw ConfigError("matrix size does not match level");
  for (size_t i = 0; i < s_words.size(); ++i) {
    for (size_t ip = 0; ip < t_words.size(); ++ip) {
      Eigen::Index row = static_cast<Eigen::Index>(i * t_words.size() + ip);
      for (size_t j = 0; j < s_words.size(); ++j) {
        for (size_t jp = 0; jp < t_words.size(); ++jp) {
          Eigen::Index col = static_cast<Eigen::Index>(j * t_words.size() + jp);
          if (M(row, col) == Cplx{0.0, 0.0}) continue;
          Monomial mono;
          mono.creation = s_words[i];
          mono.creation.insert(mono.creation.end(), t_words[ip].begin(), t_words[ip].end());
          mono.annihilation = s_words[j];
          mono.annihilation.insert(mono.annihilation.end(), t_words[jp].begin(),
                                   t_words[jp].end());
          out.add_term(std::move(mono), M(row, col));
        }
      }
    }
  }
  return out;
}

Element level_matrix_unit(const AlgebraConfig& cfg, const Word& mu, const Word& mup,
                          const Word& nup, const Word& nu) {
  Monomial mono;
  mono.creation = mu;
  mono.creation.insert(mono.creation.end(), mup.begin(), mup.end());
  mono.annihilation = nu;
  mono.annihilation.insert(mono.annihilation.end(), nup.begin(), nup.end());
  ExactCoeffs ring{cfg.vars};
  return Element::monomial(cfg, ring, std::move(mono), ring.one());
}

// ---------------------------------------------------------------------------

Element implementing_isometry(const AlgebraConfig& cfg, int k, int l) {
  if (cfg.n < 2 || cfg.m < 2)
    throw ConfigError("implementing isometry needs n, m >= 2");
  ExactCoeffs ring{cfg.vars};
  RawWord gamma;
  for (int t = 0; t < 2 * k; ++t) gamma.push_back({s_letter(1), false});
  gamma.push_back({s_letter(2), false});
  for (int t = 0; t < 2 * l; ++t) gamma.push_back({t_letter(1), false});
  gamma.push_back({t_letter(2), false});

  std::vector<RawTerm<ExactCoeffs>> input;
  for (const Word& delta : words_of_length(cfg.n, k, Letter::S)) {
    for (const Word& eps : words_of_length(cfg.m, l, Letter::T)) {
      RawWord w;
      for (Letter x : delta) w.push_back({x, false});
      for (Letter x : eps) w.push_back({x, false});
      w.insert(w.end(), gamma.begin(), gamma.end());
      for (auto it = eps.rbegin(); it != eps.rend(); ++it) w.push_back({*it, true});
      for (auto it = delta.rbegin(); it != delta.rend(); ++it) w.push_back({*it, true});
      input.push_back({ring.one(), std::move(w)});
    }
  }
  return normal_order<ExactCoeffs>(cfg, ring, input);
}

WitnessResult pure_infinite_witness(const NumElement& x) {
  const AlgebraConfig& cfg = x.config();
  require_unimodular_mode(cfg);
  if (max_abs_coeff(x) < 1e-14) throw DomainError("witness requires a nonzero element");

  const NumericCoeffs& ring = x.ring();
  NumElement y = multiply(x.adjoint(), x);

  int r = 0;
  for (const auto& [mono, c] : y.terms()) {
    auto b = mono.block_lengths();
    r = std::max({r, b[0], b[1], b[2], b[3]});
  }

  NumElement phi_y = y.expectation(Expect::Phi);
  Eigen::MatrixXcd M = to_matrix(phi_y, r, r);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (M + M.adjoint()));
  Eigen::Index top = M.rows() - 1;  // eigenvalues ascending
  double lambda = es.eigenvalues()(top);
  if (lambda <= 0) throw DomainError("expectation of x*x has no positive part");
  Eigen::VectorXcd xi = es.eigenvectors().col(top);

  // e = xi xi^*; u maps xi to the basis vector of (1..1, 1..1) up to phase.
  Eigen::MatrixXcd e_mat = xi * xi.adjoint();
  Eigen::Index target = 0;  // index of ((1,...,1),(1,...,1)) in lexicographic order
  Eigen::VectorXcd et = Eigen::VectorXcd::Zero(M.rows());
  et(target) = Cplx{1.0, 0.0};
  Cplx xi_t = xi(target);
  Cplx eta = (std::abs(xi_t) > 1e-14) ? xi_t / std::abs(xi_t) : Cplx{1.0, 0.0};
  Eigen::VectorXcd v = xi - eta * et;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(M.rows(), M.rows());
  double vn2 = v.squaredNorm();
  if (vn2 > 1e-28) u -= (2.0 / vn2) * (v * v.adjoint());
  // Householder maps xi to eta * et; absorb the phase so that u xi = et.
  u = std::conj(eta) * u;

  VarAssignment assign = ring.assign;
  NumElement e_elem = from_matrix(cfg, assign, e_mat, r, r);
  NumElement u_elem = from_matrix(cfg, assign, u, r, r);
  NumElement w = specialize(implementing_isometry(cfg, r, r), assign);

  Monomial head;  // (t_1^*)^r (s_1^*)^r  ==  (s_1^r t_1^r)^*
  for (int t = 0; t < r; ++t) head.annihilation.push_back(s_letter(1));
  for (int t = 0; t < r; ++t) head.annihilation.push_back(t_letter(1));
  NumElement head_elem = NumElement::monomial(cfg, ring, head, ring.one());

  NumElement z = head_elem.scaled(Cplx{1.0 / std::sqrt(lambda), 0.0});
  z = multiply(z, u_elem);
  z = multiply(z, e_elem);
  z = multiply(z, w.adjoint());

  WitnessResult out{multiply(z, x.adjoint()), z.adjoint(), r, lambda, 0.0};
  NumElement axb = multiply(multiply(out.a, x), out.b);
  out.residual = quotient_max_dev(axb, NumElement::unit(cfg, ring));
  return out;
}

// ---------------------------------------------------------------------------

Element matrix_unit_toeplitz(const AlgebraConfig& cfg, UnitKind kind,
                             const Word& mu, const Word& nu) {
  ExactCoeffs ring{cfg.vars};
  std::vector<RawTerm<ExactCoeffs>> input;
  RawWord head, tail;
  for (Letter l : mu) {
    cfg.check_letter(l);
    head.push_back({l, false});
  }
  for (auto it = nu.rbegin(); it != nu.rend(); ++it) {
    cfg.check_letter(*it);
    tail.push_back({*it, true});
  }
  // 1 - (range sum) in the middle
  RawWord unit = head;
  unit.insert(unit.end(), tail.begin(), tail.end());
  input.push_back({ring.one(), unit});
  int count = (kind == UnitKind::S) ? cfg.n : cfg.m;
  for (int j = 1; j <= count; ++j) {
    Letter l = (kind == UnitKind::S) ? s_letter(j) : t_letter(j);
    RawWord w = head;
    w.push_back({l, false});
    w.push_back({l, true});
    w.insert(w.end(), tail.begin(), tail.end());
    input.push_back({-ring.one(), w});
  }
  return normal_order<ExactCoeffs>(cfg, ring, input);
}

IdealFlags ideal_membership(const Element& x) {
  IdealFlags f;
  f.in_I1 = quotient_is_zero(x, QuotientKind::SOnly);
  f.in_I2 = quotient_is_zero(x, QuotientKind::TOnly);
  f.in_Mq = quotient_is_zero(x, QuotientKind::Full);
  f.in_Iq = f.in_I1 && f.in_I2;
  return f;
}

}  // namespace qcuntz
