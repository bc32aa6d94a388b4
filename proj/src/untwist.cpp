#include "qcuntz/core/untwist.hpp"

#include <cmath>

namespace qcuntz {

namespace {

SpMat sparse_identity(Eigen::Index d) {
  SpMat I(d, d);
  I.setIdentity();
  return I;
}

/// Sum over words |mu| = k of q^k v_mu A v_mu^*, accumulated level by level.
SpMat level_average(const UntwistModel& model, const SpMat& A, int k, Cplx q) {
  if (k == 0) return A;
  SpMat acc = A;
  for (int step = 0; step < k; ++step) {
    SpMat next(acc.rows(), acc.cols());
    for (int i = 1; i <= model.n; ++i) {
      const SpMat& vi = model.v(i);
      next = next + SpMat(q * SpMat(vi * SpMat(acc * SpMat(vi.adjoint()))));
    }
    acc = next;
  }
  return acc;
}

}  // namespace

SpMat UntwistModel::sqrt_factor(int power) const {
  double c = std::norm(q0);
  double root = std::pow(1.0 - c, 0.5 * power);
  SpMat I = sparse_identity(free.dim);
  // f(1 - c Qt) = (1 - Qt) + f(1 - c) Qt for the projection Qt
  return SpMat(I - Qt) + SpMat(Cplx{root, 0.0} * Qt);
}

UntwistModel build_untwist(int n, int m, Cplx q0, int L) {
  if (std::abs(q0) >= 1.0) throw DomainError("the untwisting regime requires |q| < 1");
  UntwistModel model;
  model.n = n;
  model.m = m;
  model.L = L;
  model.q0 = q0;

  int d = n + m;
  Rep& rep = model.free;
  rep.n = n;
  rep.m = m;
  rep.dim = fock_dim(d, L);
  rep.space = "free(" + std::to_string(d) + "," + std::to_string(L) + ")";
  for (int i = 1; i <= d; ++i) {
    std::vector<Eigen::Triplet<Cplx>> trips;
    for (Eigen::Index col = 0; col < rep.dim; ++col) {
      std::vector<int> wd = fock_word(d, L, col);
      if (static_cast<int>(wd.size()) >= L) continue;
      wd.insert(wd.begin(), i);
      trips.emplace_back(fock_index(d, wd), col, Cplx{1.0, 0.0});
    }
    SpMat vi(rep.dim, rep.dim);
    vi.setFromTriplets(trips.begin(), trips.end());
    if (i <= n)
      rep.S.push_back(std::move(vi));
    else
      rep.T.push_back(std::move(vi));
  }
  rep.depth.resize(rep.dim);
  for (Eigen::Index i = 0; i < rep.dim; ++i)
    rep.depth[i] = L - static_cast<int>(fock_word(d, L, i).size());

  model.Qt = rep.Q();

  SpMat half = model.sqrt_factor(1);
  for (int r = 1; r <= m; ++r) model.wt.push_back(SpMat(model.v(n + r) * half));

  for (int r = 1; r <= m; ++r) {
    SpMat acc(rep.dim, rep.dim);
    for (int k = 0; k <= L; ++k) acc = acc + level_average(model, model.wt[r - 1], k, q0);
    model.w.push_back(std::move(acc));
  }
  return model;
}

UntwistResiduals untwist_residuals(const UntwistModel& model, int order) {
  UntwistResiduals out;
  const Rep& rep = model.free;
  SpMat I = sparse_identity(rep.dim);
  double c = std::norm(model.q0);
  SpMat one_minus_cQ = SpMat(I - SpMat(Cplx{c, 0.0} * model.Qt));

  for (int r = 1; r <= model.m; ++r) {
    for (int l = 1; l <= model.m; ++l) {
      SpMat R = SpMat(model.w[r - 1].adjoint() * model.w[l - 1]);
      if (r == l) R = R - I;
      out.w_isometry = std::max(out.w_isometry, residual_on_interior(R, rep, order));

      SpMat Rt = SpMat(model.wt[r - 1].adjoint() * model.wt[l - 1]);
      if (r == l) Rt = Rt - one_minus_cQ;
      out.wtwt = std::max(out.wtwt, residual_on_interior(Rt, rep, order));
    }
    SpMat Rec = SpMat(SpMat(I - model.Qt) * model.w[r - 1]) - model.wt[r - 1];
    out.wt_recover = std::max(out.wt_recover, residual_on_interior(Rec, rep, order));
    for (int i = 1; i <= model.n; ++i) {
      SpMat R = SpMat(SpMat(model.v(i).adjoint()) * model.w[r - 1]) -
                SpMat(model.q0 * SpMat(model.w[r - 1] * SpMat(model.v(i).adjoint())));
      out.vw_relation = std::max(out.vw_relation, residual_on_interior(R, rep, order));
    }
  }
  return out;
}

SpMat hat_generator(const UntwistModel& model, int r) {
  SpMat I = sparse_identity(model.free.dim);
  SpMat proj = SpMat(I - model.Qt);
  return SpMat(SpMat(proj * model.w[r - 1]) * model.sqrt_factor(-1));
}

HatResiduals hat_residuals(const UntwistModel& model, int order) {
  HatResiduals out;
  const Rep& rep = model.free;
  SpMat I = sparse_identity(rep.dim);
  std::vector<SpMat> hats;
  for (int r = 1; r <= model.m; ++r) hats.push_back(hat_generator(model, r));
  for (int r = 0; r < model.m; ++r) {
    for (int l = 0; l < model.m; ++l) {
      SpMat R = SpMat(hats[r].adjoint() * hats[l]);
      if (r == l) R = R - I;
      out.isometry = std::max(out.isometry, residual_on_interior(R, rep, order));
    }
    for (int i = 1; i <= model.n; ++i) {
      SpMat R = SpMat(SpMat(model.v(i).adjoint()) * hats[r]);
      out.s_orth = std::max(out.s_orth, residual_on_interior(R, rep, order));
    }
  }
  return out;
}

double roundtrip_deviation(const UntwistModel& model, int order) {
  double mx = 0.0;
  for (int r = 1; r <= model.m; ++r) {
    SpMat R = hat_generator(model, r) - model.v(model.n + r);
    mx = std::max(mx, residual_on_interior(R, model.free, order));
  }
  return mx;
}

double partial_sum_residual(const UntwistModel& model, int r, int N, int order) {
  if (N >= model.L) throw ConfigError("partial sum depth must stay below the truncation");
  const Rep& rep = model.free;
  SpMat I = sparse_identity(rep.dim);
  const SpMat& t = model.w[r - 1];
  SpMat ttilde = SpMat(SpMat(I - model.Qt) * t);

  SpMat lhs(rep.dim, rep.dim);
  for (int k = 0; k <= N; ++k) lhs = lhs + level_average(model, ttilde, k, model.q0);

  Cplx qpow{1.0, 0.0};
  for (int k = 0; k <= N; ++k) qpow *= model.q0;
  SpMat tail = level_average(model, t, N + 1, Cplx{1.0, 0.0});
  SpMat rhs = t - SpMat(qpow * tail);

  return residual_on_interior(SpMat(lhs - rhs), rep, order);
}

bool series_terminates(const UntwistModel& model) {
  // Words of length L + 1 vanish identically on the truncation.
  for (int r = 1; r <= model.m; ++r) {
    SpMat term = level_average(model, model.wt[r - 1], model.L + 1, model.q0);
    if (term.nonZeros() != 0 && residual_on_interior(term, model.free, 0) != 0.0)
      return false;
  }
  return true;
}

}  // namespace qcuntz
