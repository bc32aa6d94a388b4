#include "qcuntz/core/rieffel.hpp"

#include <cmath>
#include <numbers>

namespace qcuntz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double phi0_of(Cplx q0) {
  double phi = std::arg(q0) / kTwoPi;
  if (phi < 0) phi += 1.0;
  if (phi >= 1.0) phi -= 1.0;
  return phi;
}

}  // namespace

Eigen::Matrix2d theta_from_q(Cplx q0) {
  if (std::abs(std::abs(q0) - 1.0) > 1e-12)
    throw DomainError("theta_from_q requires |q| = 1");
  double half = 0.5 * phi0_of(q0);
  Eigen::Matrix2d theta;
  theta << 0.0, half, -half, 0.0;
  return theta;
}

long long twist_height(Eigen::Vector2i p, Eigen::Vector2i r) {
  return static_cast<long long>(p(1)) * r(0) - static_cast<long long>(p(0)) * r(1);
}

Cplx twist_phase(const Eigen::Matrix2d& theta, Eigen::Vector2i p, Eigen::Vector2i r) {
  Eigen::Vector2d tp = theta * p.cast<double>();
  double inner = tp.dot(r.cast<double>());
  return std::polar(1.0, kTwoPi * inner);
}

GradedExact make_graded(Eigen::Vector2i degree, Element elem, mpq_class turns) {
  Element part = elem.gauge_component({degree(0), degree(1)});
  if (!(part == elem))
    throw ConfigError("payload is not homogeneous of the declared degree");
  return GradedExact{degree, std::move(elem), std::move(turns)};
}

GradedExact twisted_mul(const GradedExact& a, const GradedExact& b,
                        const mpq_class& phi0, int sign) {
  // <Theta_q p, r> = (phi0 / 2) * (p2 r1 - p1 r2)
  long h = static_cast<long>(twist_height(a.degree, b.degree)) * sign;
  mpq_class extra = phi0 * mpq_class(h, 2);
  GradedExact out;
  out.degree = a.degree + b.degree;
  out.elem = multiply(a.elem, b.elem);
  out.turns = a.turns + b.turns + extra;
  return out;
}

bool same_phase(const mpq_class& t1, const mpq_class& t2) {
  mpq_class diff = t1 - t2;
  return diff.get_den() == 1;
}

BasisDegrees pair_basis_degrees(int n, int N, int m, int M) {
  Eigen::Index Dn = fock_dim(n, N), Dm = fock_dim(m, M);
  BasisDegrees degs(Dn * Dm);
  for (Eigen::Index i = 0; i < Dn; ++i) {
    int l1 = static_cast<int>(fock_word(n, N, i).size());
    for (Eigen::Index k = 0; k < Dm; ++k) {
      int l2 = static_cast<int>(fock_word(m, M, k).size());
      degs[i * Dm + k] = Eigen::Vector2i(l1, l2);
    }
  }
  return degs;
}

Rep deform_rep(const Rep& rep, const BasisDegrees& degrees, const Eigen::Matrix2d& theta) {
  if (static_cast<Eigen::Index>(degrees.size()) != rep.dim)
    throw ConfigError("grading missing or of wrong size");
  Rep out = rep;
  auto deform = [&](const SpMat& G, Eigen::Vector2i p) {
    // pi_Theta(a) xi = phase(p, deg(xi)) pi(a) xi: scale columns by the
    // source degree phase.
    SpMat D(rep.dim, rep.dim);
    std::vector<Eigen::Triplet<Cplx>> trips;
    trips.reserve(rep.dim);
    for (Eigen::Index c = 0; c < rep.dim; ++c)
      trips.emplace_back(c, c, twist_phase(theta, p, degrees[c]));
    D.setFromTriplets(trips.begin(), trips.end());
    return SpMat(G * D);
  };
  for (auto& Sj : out.S) Sj = deform(Sj, Eigen::Vector2i(1, 0));
  for (auto& Tr : out.T) Tr = deform(Tr, Eigen::Vector2i(0, 1));
  return out;
}

Rep plain_pair_rep(int n, int m, int N, int M) {
  return build_fock_rep(n, m, N, M, Cplx{1.0, 0.0}, FockForm::A);
}

double rep_deviation(const Rep& a, const Rep& b) {
  if (a.dim != b.dim || a.n != b.n || a.m != b.m)
    throw ConfigError("representations live on different spaces");
  double mx = 0.0;
  auto dev = [&](const SpMat& X, const SpMat& Y) {
    SpMat D = X - Y;
    for (int k = 0; k < D.outerSize(); ++k)
      for (SpMat::InnerIterator it(D, k); it; ++it)
        mx = std::max(mx, std::abs(it.value()));
  };
  for (int j = 0; j < a.n; ++j) dev(a.S[j], b.S[j]);
  for (int r = 0; r < a.m; ++r) dev(a.T[r], b.T[r]);
  return mx;
}

CrossedUntwistResiduals crossed_untwist_check(int n, int m, Cplx q0, int N, int M) {
  if (std::abs(std::abs(q0) - 1.0) > 1e-12)
    throw DomainError("crossed-product untwist requires |q| = 1");
  double phi0 = phi0_of(q0);
  Cplx root = std::polar(1.0, std::numbers::pi * phi0);  // e^{i pi phi0}

  Rep plain = plain_pair_rep(n, m, N, M);
  Eigen::Index Dn = fock_dim(n, N), Dm = fock_dim(m, M);

  // u = d_n(root) (x) d_m(conj(root))
  std::vector<Eigen::Triplet<Cplx>> trips;
  for (Eigen::Index i = 0; i < Dn; ++i) {
    int l1 = static_cast<int>(fock_word(n, N, i).size());
    for (Eigen::Index k = 0; k < Dm; ++k) {
      int l2 = static_cast<int>(fock_word(m, M, k).size());
      Cplx val = std::polar(1.0, std::numbers::pi * phi0 * (l1 - l2));
      trips.emplace_back(i * Dm + k, i * Dm + k, val);
    }
  }
  SpMat u(plain.dim, plain.dim);
  u.setFromTriplets(trips.begin(), trips.end());
  SpMat ustar = SpMat(u.adjoint());

  std::vector<SpMat> shat, that;
  for (int j = 0; j < n; ++j) shat.push_back(SpMat(plain.S[j] * u));
  for (int r = 0; r < m; ++r) that.push_back(SpMat(plain.T[r] * u));

  CrossedUntwistResiduals out;
  SpMat I(plain.dim, plain.dim);
  I.setIdentity();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      SpMat R = SpMat(shat[j].adjoint() * shat[k]);
      if (j == k) R = R - I;
      out.isometries = std::max(out.isometries, residual_on_interior(R, plain, 2));
    }
  for (int r = 0; r < m; ++r)
    for (int l = 0; l < m; ++l) {
      SpMat R = SpMat(that[r].adjoint() * that[l]);
      if (r == l) R = R - I;
      out.isometries = std::max(out.isometries, residual_on_interior(R, plain, 2));
    }
  for (int j = 0; j < n; ++j) {
    for (int r = 0; r < m; ++r) {
      SpMat R1 = SpMat(SpMat(shat[j].adjoint()) * that[r]) -
                 SpMat(q0 * SpMat(that[r] * SpMat(shat[j].adjoint())));
      out.cross_st = std::max(out.cross_st, residual_on_interior(R1, plain, 2));
      SpMat R2 = SpMat(that[r] * shat[j]) - SpMat(q0 * SpMat(shat[j] * that[r]));
      out.cross_ts = std::max(out.cross_ts, residual_on_interior(R2, plain, 2));
    }
  }
  for (int j = 0; j < n; ++j) {
    SpMat R = SpMat(SpMat(u * shat[j]) * ustar) - SpMat(root * shat[j]);
    out.u_comm = std::max(out.u_comm, residual_on_interior(R, plain, 2));
  }
  for (int r = 0; r < m; ++r) {
    SpMat R = SpMat(SpMat(u * that[r]) * ustar) - SpMat(std::conj(root) * that[r]);
    out.u_comm = std::max(out.u_comm, residual_on_interior(R, plain, 2));
  }
  return out;
}

}  // namespace qcuntz
