#include "qcuntz/core/fockrep.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace qcuntz {

namespace {

constexpr double kUnimodularTol = 1e-12;

double phi0_of(Cplx q0) {
  double phi = std::arg(q0) / (2.0 * std::numbers::pi);
  if (phi < 0) phi += 1.0;
  if (phi >= 1.0) phi -= 1.0;
  return phi;
}

void require_unimodular(Cplx q0) {
  if (std::abs(std::abs(q0) - 1.0) > kUnimodularTol)
    throw DomainError("|q| = 1 required for this construction");
}

SpMat sparse_from_triplets(Eigen::Index rows, Eigen::Index cols,
                           std::vector<Eigen::Triplet<Cplx>>& trips) {
  SpMat A(rows, cols);
  A.setFromTriplets(trips.begin(), trips.end());
  A.makeCompressed();
  return A;
}

SpMat sparse_identity(Eigen::Index d) {
  SpMat I(d, d);
  I.setIdentity();
  return I;
}

SpMat kron(const SpMat& A, const SpMat& B) {
  std::vector<Eigen::Triplet<Cplx>> trips;
  trips.reserve(static_cast<size_t>(A.nonZeros()) * B.nonZeros());
  for (int ka = 0; ka < A.outerSize(); ++ka) {
    for (SpMat::InnerIterator ia(A, ka); ia; ++ia) {
      for (int kb = 0; kb < B.outerSize(); ++kb) {
        for (SpMat::InnerIterator ib(B, kb); ib; ++ib) {
          trips.emplace_back(ia.row() * B.rows() + ib.row(),
                             ia.col() * B.cols() + ib.col(),
                             ia.value() * ib.value());
        }
      }
    }
  }
  SpMat out(A.rows() * B.rows(), A.cols() * B.cols());
  out.setFromTriplets(trips.begin(), trips.end());
  out.makeCompressed();
  return out;
}

/// Creation operator by letter j on the free Fock space over d letters.
SpMat fock_creation(int d, int L, int j) {
  Eigen::Index dim = fock_dim(d, L);
  std::vector<Eigen::Triplet<Cplx>> trips;
  for (Eigen::Index col = 0; col < dim; ++col) {
    std::vector<int> w = fock_word(d, L, col);
    if (static_cast<int>(w.size()) >= L) continue;  // top level annihilated
    w.insert(w.begin(), j);
    trips.emplace_back(fock_index(d, w), col, Cplx{1.0, 0.0});
  }
  return sparse_from_triplets(dim, dim, trips);
}

SpMat fock_diag(int d, int L, Cplx lambda) {
  Eigen::Index dim = fock_dim(d, L);
  std::vector<Eigen::Triplet<Cplx>> trips;
  for (Eigen::Index i = 0; i < dim; ++i) {
    int level = static_cast<int>(fock_word(d, L, i).size());
    Cplx v{1.0, 0.0};
    for (int t = 0; t < level; ++t) v *= lambda;
    trips.emplace_back(i, i, v);
  }
  return sparse_from_triplets(dim, dim, trips);
}

}  // namespace

Eigen::Index fock_dim(int d, int L) {
  Eigen::Index dim = 0, level = 1;
  for (int l = 0; l <= L; ++l) {
    dim += level;
    level *= d;
  }
  return dim;
}

Eigen::Index fock_index(int d, const std::vector<int>& word) {
  Eigen::Index offset = 0, level = 1;
  for (size_t l = 0; l < word.size(); ++l) {
    offset += level;
    level *= d;
  }
  Eigen::Index within = 0;
  for (int letter : word) within = within * d + (letter - 1);
  return offset + within;
}

std::vector<int> fock_word(int d, int L, Eigen::Index index) {
  Eigen::Index offset = 0, level = 1;
  for (int l = 0; l <= L; ++l) {
    if (index < offset + level) {
      Eigen::Index within = index - offset;
      std::vector<int> w(l);
      for (int k = l - 1; k >= 0; --k) {
        w[k] = static_cast<int>(within % d) + 1;
        within /= d;
      }
      return w;
    }
    offset += level;
    level *= d;
  }
  throw ConfigError("fock index out of range");
}

std::vector<char> Rep::interior_mask(int order) const {
  std::vector<char> mask(dim, 0);
  for (Eigen::Index i = 0; i < dim; ++i) mask[i] = depth[i] >= order ? 1 : 0;
  return mask;
}

Eigen::Index Rep::interior_dim(int order) const {
  auto mask = interior_mask(order);
  return std::count(mask.begin(), mask.end(), char(1));
}

SpMat Rep::interior_projector(int order) const {
  auto mask = interior_mask(order);
  std::vector<Eigen::Triplet<Cplx>> trips;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (mask[i]) trips.emplace_back(i, i, Cplx{1.0, 0.0});
  return sparse_from_triplets(dim, dim, trips);
}

SpMat Rep::Q() const {
  SpMat acc(dim, dim);
  for (const auto& Sj : S) acc = acc + SpMat(Sj * SpMat(Sj.adjoint()));
  return acc;
}

SpMat Rep::P() const {
  SpMat acc(dim, dim);
  for (const auto& Tr : T) acc = acc + SpMat(Tr * SpMat(Tr.adjoint()));
  return acc;
}

Rep build_fock_rep(int n, int m, int N, int M, Cplx q0, FockForm form) {
  require_unimodular(q0);
  double phi0 = phi0_of(q0);
  Cplx qhalf = std::polar(1.0, std::numbers::pi * phi0);
  Cplx q = std::polar(1.0, 2.0 * std::numbers::pi * phi0);

  Eigen::Index Dn = fock_dim(n, N), Dm = fock_dim(m, M);
  SpMat In = sparse_identity(Dn), Im = sparse_identity(Dm);

  Rep rep;
  rep.n = n;
  rep.m = m;
  rep.dim = Dn * Dm;
  rep.space = "pair(" + std::to_string(n) + "," + std::to_string(m) + "," +
              std::to_string(N) + "," + std::to_string(M) + ")";

  SpMat left_t, right_s;
  switch (form) {
    case FockForm::A:
      right_s = fock_diag(m, M, 1.0 / qhalf);
      left_t = fock_diag(n, N, qhalf);
      break;
    case FockForm::B:
      right_s = Im;
      left_t = fock_diag(n, N, q);
      break;
    case FockForm::C:
      right_s = fock_diag(m, M, 1.0 / q);
      left_t = In;
      break;
  }

  for (int j = 1; j <= n; ++j) rep.S.push_back(kron(fock_creation(n, N, j), right_s));
  for (int r = 1; r <= m; ++r) rep.T.push_back(kron(left_t, fock_creation(m, M, r)));

  rep.depth.resize(rep.dim);
  for (Eigen::Index i = 0; i < Dn; ++i) {
    int ln = static_cast<int>(fock_word(n, N, i).size());
    for (Eigen::Index k = 0; k < Dm; ++k) {
      int lm = static_cast<int>(fock_word(m, M, k).size());
      rep.depth[i * Dm + k] = std::min(N - ln, M - lm);
    }
  }
  return rep;
}

Rep clock_shift_rep(int K, Cplx q0) {
  require_unimodular(q0);
  Cplx qK{1.0, 0.0};
  for (int t = 0; t < K; ++t) qK *= q0;
  if (std::abs(qK - Cplx{1.0, 0.0}) > 1e-9)
    throw DomainError("clock_shift_rep requires q0^K = 1");

  std::vector<Eigen::Triplet<Cplx>> shift, clock;
  for (int k = 0; k < K; ++k) {
    shift.emplace_back((k + 1) % K, k, Cplx{1.0, 0.0});
    Cplx w{1.0, 0.0};
    for (int t = 0; t < k; ++t) w *= q0;
    clock.emplace_back(k, k, w);
  }
  Rep rep;
  rep.n = rep.m = 1;
  rep.dim = K;
  rep.space = "clock_shift(" + std::to_string(K) + ")";
  rep.S.push_back(sparse_from_triplets(K, K, shift));  // s = cyclic shift
  rep.T.push_back(sparse_from_triplets(K, K, clock));  // t = clock
  rep.depth.assign(K, 1 << 20);
  return rep;
}

Rep synthetic_block_rep(BlockKind kind, int K, Cplx q0) {
  require_unimodular(q0);
  std::vector<Eigen::Triplet<Cplx>> shift, diag;
  for (int k = 0; k < K; ++k) {
    if (k + 1 < K) shift.emplace_back(k + 1, k, Cplx{1.0, 0.0});
    Cplx w{1.0, 0.0};
    Cplx base = (kind == BlockKind::QFull_PFock) ? std::conj(q0) : q0;
    for (int t = 0; t < k; ++t) w *= base;
    diag.emplace_back(k, k, w);
  }
  Rep rep;
  rep.n = rep.m = 1;
  rep.dim = K;
  if (kind == BlockKind::QFull_PFock) {
    rep.space = "block_qfull(" + std::to_string(K) + ")";
    rep.S.push_back(sparse_from_triplets(K, K, diag));   // s = diag(conj(q)^k)
    rep.T.push_back(sparse_from_triplets(K, K, shift));  // t = truncated shift
  } else {
    rep.space = "block_pfull(" + std::to_string(K) + ")";
    rep.S.push_back(sparse_from_triplets(K, K, shift));
    rep.T.push_back(sparse_from_triplets(K, K, diag));
  }
  rep.depth.resize(K);
  for (int k = 0; k < K; ++k) rep.depth[k] = K - 1 - k;
  return rep;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (a.n != b.n || a.m != b.m) throw ConfigError("direct_sum: generator counts differ");
  Rep rep;
  rep.n = a.n;
  rep.m = a.m;
  rep.dim = a.dim + b.dim;
  rep.space = a.space + " + " + b.space;
  auto blockdiag = [&](const SpMat& A, const SpMat& B) {
    std::vector<Eigen::Triplet<Cplx>> trips;
    for (int k = 0; k < A.outerSize(); ++k)
      for (SpMat::InnerIterator it(A, k); it; ++it)
        trips.emplace_back(it.row(), it.col(), it.value());
    for (int k = 0; k < B.outerSize(); ++k)
      for (SpMat::InnerIterator it(B, k); it; ++it)
        trips.emplace_back(A.rows() + it.row(), A.cols() + it.col(), it.value());
    return sparse_from_triplets(rep.dim, rep.dim, trips);
  };
  for (int j = 0; j < a.n; ++j) rep.S.push_back(blockdiag(a.S[j], b.S[j]));
  for (int r = 0; r < a.m; ++r) rep.T.push_back(blockdiag(a.T[r], b.T[r]));
  rep.depth = a.depth;
  rep.depth.insert(rep.depth.end(), b.depth.begin(), b.depth.end());
  return rep;
}

Cplx theta_zeta(const DMat& qmat, int i, int m, long k, long w) {
  // zeta_i(k, w) = q_{i1}^w * prod over base-m digits c of k of q_{i,c+1}/q_{i1};
  // satisfies zeta_i(beta_j(k), w+1) = q_{ij} zeta_i(k, w) for all k, w.
  Cplx q1 = qmat(i - 1, 0);
  Cplx acc{1.0, 0.0};
  long v = k;
  while (v > 0) {
    int digit = static_cast<int>(v % m);
    acc *= qmat(i - 1, digit) / q1;
    v /= m;
  }
  Cplx qw{1.0, 0.0};
  for (long t = 0; t < std::labs(w); ++t) qw *= (w >= 0 ? q1 : std::conj(q1));
  return acc * qw;
}

Rep concrete_theta_rep(int n, int m, const DMat& qmat, int N, int M, int W) {
  if (qmat.rows() != n || qmat.cols() != m) throw ConfigError("qmat must be n x m");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) require_unimodular(qmat(i, j));

  const long A = N + 1, K = M + 1, Z = 2 * W + 1;
  Rep rep;
  rep.n = n;
  rep.m = m;
  rep.dim = A * K * Z;
  rep.space = "theta_l2(" + std::to_string(N) + "," + std::to_string(M) + "," +
              std::to_string(W) + ")";
  auto idx = [&](long a, long k, long w) { return (a * K + k) * Z + (w + W); };

  for (int i = 1; i <= n; ++i) {
    std::vector<Eigen::Triplet<Cplx>> trips;
    for (long a = 0; a < A; ++a) {
      long a2 = static_cast<long>(n) * a + (i - 1);
      if (a2 > N) continue;
      for (long k = 0; k < K; ++k)
        for (long w = -W; w <= W; ++w)
          trips.emplace_back(idx(a2, k, w), idx(a, k, w), theta_zeta(qmat, i, m, k, w));
    }
    rep.S.push_back(sparse_from_triplets(rep.dim, rep.dim, trips));
  }
  for (int j = 1; j <= m; ++j) {
    std::vector<Eigen::Triplet<Cplx>> trips;
    for (long k = 0; k < K; ++k) {
      long k2 = static_cast<long>(m) * k + (j - 1);
      if (k2 > M) continue;
      for (long a = 0; a < A; ++a)
        for (long w = -W; w < W; ++w)
          trips.emplace_back(idx(a, k2, w + 1), idx(a, k, w), Cplx{1.0, 0.0});
    }
    rep.T.push_back(sparse_from_triplets(rep.dim, rep.dim, trips));
  }

  rep.depth.resize(rep.dim);
  for (long a = 0; a < A; ++a) {
    int r1 = 0;
    for (long top = n * (a + 1); top <= A; top *= n) ++r1;
    for (long k = 0; k < K; ++k) {
      int r2 = 0;
      for (long top = m * (k + 1); top <= K; top *= m) ++r2;
      for (long w = -W; w <= W; ++w)
        rep.depth[idx(a, k, w)] = std::min(std::min(r1, r2), W - static_cast<int>(std::labs(w)));
    }
  }
  return rep;
}

double residual_on_interior(const SpMat& A, const Rep& rep, int order) {
  auto mask = rep.interior_mask(order);
  double mx = 0.0;
  for (Eigen::Index c = 0; c < rep.dim; ++c) {
    if (!mask[c]) continue;
    double colsq = 0.0;
    for (SpMat::InnerIterator it(A, static_cast<int>(c)); it; ++it)
      colsq += std::norm(it.value());
    mx = std::max(mx, std::sqrt(colsq));
  }
  return mx;
}

RelationResiduals relation_residuals(const Rep& rep, Cplx q0, int order) {
  require_unimodular(q0);
  RelationResiduals out;
  SpMat I = sparse_identity(rep.dim);
  for (int i = 0; i < rep.n; ++i) {
    for (int j = 0; j < rep.n; ++j) {
      SpMat R = SpMat(rep.S[i].adjoint() * rep.S[j]);
      if (i == j) R = R - I;
      out.ss = std::max(out.ss, residual_on_interior(R, rep, order));
    }
  }
  for (int r = 0; r < rep.m; ++r) {
    for (int l = 0; l < rep.m; ++l) {
      SpMat R = SpMat(rep.T[r].adjoint() * rep.T[l]);
      if (r == l) R = R - I;
      out.tt = std::max(out.tt, residual_on_interior(R, rep, order));
    }
  }
  for (int j = 0; j < rep.n; ++j) {
    for (int r = 0; r < rep.m; ++r) {
      SpMat R1 = SpMat(rep.S[j].adjoint() * rep.T[r]) - SpMat(q0 * SpMat(rep.T[r] * SpMat(rep.S[j].adjoint())));
      out.st = std::max(out.st, residual_on_interior(R1, rep, order));
      SpMat R2 = SpMat(rep.T[r] * rep.S[j]) - SpMat(q0 * SpMat(rep.S[j] * rep.T[r]));
      out.ts = std::max(out.ts, residual_on_interior(R2, rep, order));
    }
  }
  return out;
}

double theta_relation_residual(const Rep& rep, const DMat& qmat, int order) {
  double mx = 0.0;
  SpMat I = sparse_identity(rep.dim);
  for (int i = 0; i < rep.n; ++i)
    for (int j = 0; j < rep.n; ++j) {
      SpMat R = SpMat(rep.S[i].adjoint() * rep.S[j]);
      if (i == j) R = R - I;
      mx = std::max(mx, residual_on_interior(R, rep, order));
    }
  for (int r = 0; r < rep.m; ++r)
    for (int l = 0; l < rep.m; ++l) {
      SpMat R = SpMat(rep.T[r].adjoint() * rep.T[l]);
      if (r == l) R = R - I;
      mx = std::max(mx, residual_on_interior(R, rep, order));
    }
  for (int i = 0; i < rep.n; ++i)
    for (int j = 0; j < rep.m; ++j) {
      SpMat R = SpMat(rep.S[i] * rep.T[j]) - SpMat(qmat(i, j) * SpMat(rep.T[j] * rep.S[i]));
      mx = std::max(mx, residual_on_interior(R, rep, order));
    }
  mx = std::max(mx, residual_on_interior(SpMat(rep.Q() - I), rep, order));
  mx = std::max(mx, residual_on_interior(SpMat(rep.P() - I), rep, order));
  return mx;
}

SpMat evaluate(const NumElement& x, const Rep& rep) {
  if (x.config().n != rep.n || x.config().m != rep.m)
    throw ConfigError("element and representation sizes differ");
  SpMat acc(rep.dim, rep.dim);
  for (const auto& [mono, c] : x.terms()) {
    SpMat term = sparse_identity(rep.dim);
    for (Letter l : mono.creation) term = SpMat(term * rep.op(l));
    for (auto it = mono.annihilation.rbegin(); it != mono.annihilation.rend(); ++it)
      term = SpMat(term * SpMat(rep.op(*it).adjoint()));
    acc = acc + SpMat(c * term);
  }
  return acc;
}

SpMat evaluate(const Element& x, const Rep& rep, const VarAssignment& a) {
  return evaluate(specialize(x, a), rep);
}

SpMat evaluate_raw(const RawWord& w, const Rep& rep) {
  SpMat acc = sparse_identity(rep.dim);
  for (const RawLetter& rl : w) {
    const SpMat& G = rep.op(rl.letter);
    acc = rl.starred ? SpMat(acc * SpMat(G.adjoint())) : SpMat(acc * G);
  }
  return acc;
}

Rep gauge_scaled(const Rep& rep, Cplx z1, Cplx z2) {
  Rep out = rep;
  for (auto& Sj : out.S) Sj = SpMat(z1 * Sj);
  for (auto& Tr : out.T) Tr = SpMat(z2 * Tr);
  return out;
}

DMat wick_T(int n, int m, Cplx q0) {
  int d = n + m;
  DMat T = DMat::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      bool i_s = i < n, j_s = j < n;
      if (i_s == j_s) continue;
      // T e_i (x) e_j = q e_j (x) e_i when i is an s-index, conj(q) otherwise
      T(j * d + i, i * d + j) = i_s ? q0 : std::conj(q0);
    }
  }
  return T;
}

double operator_norm(const DMat& A) {
  if (A.rows() == 0 || A.cols() == 0) return 0.0;
  Eigen::JacobiSVD<DMat> svd(A);
  return svd.singularValues()(0);
}

double braid_residual(const DMat& T, int d) {
  Eigen::Index D = d * d;
  if (T.rows() != D) throw ConfigError("braid_residual: size mismatch");
  DMat Id = DMat::Identity(d, d);
  auto kron_d = [](const DMat& A, const DMat& B) {
    DMat out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      for (Eigen::Index j = 0; j < A.cols(); ++j)
        out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return out;
  };
  DMat oneT = kron_d(Id, T), Tone = kron_d(T, Id);
  return operator_norm(oneT * Tone * oneT - Tone * oneT * Tone);
}

// ---------------------------------------------------------------------------
// Wold classification
// ---------------------------------------------------------------------------

namespace {

// Orthonormal accumulation with full-space vectors restricted to a mask.
struct SpanBasis {
  std::vector<DVec> basis;
  double keep_tol = 1e-8;

  // Returns true when v had a component orthogonal to the span (now added).
  bool add(DVec v) {
    for (int pass = 0; pass < 2; ++pass)
      for (const DVec& b : basis) v -= b.dot(v) * b;
    double nrm = v.norm();
    if (nrm <= keep_tol) return false;
    basis.push_back(v / nrm);
    return true;
  }
  bool contains_only() const { return basis.empty(); }
};

DVec mask_project(const DVec& v, const std::vector<char>& mask) {
  DVec out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i)
    if (!mask[i]) out(i) = Cplx{0.0, 0.0};
  return out;
}

double mass_outside(const DVec& v, const std::vector<char>& mask) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!mask[i]) s += std::norm(v(i));
  return std::sqrt(s);
}

// Numeric kernel of a PSD operator restricted to the span of `inside`.
std::vector<DVec> kernel_within(const DMat& op, const std::vector<DVec>& inside,
                                double null_tol) {
  if (inside.empty()) return {};
  Eigen::Index k = static_cast<Eigen::Index>(inside.size());
  DMat B(op.rows(), k);
  for (Eigen::Index j = 0; j < k; ++j) B.col(j) = inside[j];
  DMat compressed = B.adjoint() * op * B;  // k x k, Hermitian PSD
  Eigen::SelfAdjointEigenSolver<DMat> es(0.5 * (compressed + compressed.adjoint()));
  std::vector<DVec> out;
  for (Eigen::Index j = 0; j < k; ++j)
    if (std::abs(es.eigenvalues()(j)) < null_tol) out.push_back(B * es.eigenvectors().col(j));
  return out;
}

// BFS closure of `seed` under the given generators, staying inside the mask.
std::vector<DVec> closure(const std::vector<DVec>& seed,
                          const std::vector<const SpMat*>& gens,
                          const std::vector<char>& mask) {
  SpanBasis span;
  std::deque<DVec> queue;
  for (const DVec& v : seed)
    if (span.add(mask_project(v, mask))) queue.push_back(span.basis.back());
  while (!queue.empty()) {
    DVec v = queue.front();
    queue.pop_front();
    for (const SpMat* G : gens) {
      DVec w = (*G) * v;
      double nrm = w.norm();
      if (nrm < 1e-10) continue;
      if (mass_outside(w, mask) > 1e-10 * nrm) continue;  // escapes the window
      if (span.add(w)) queue.push_back(span.basis.back());
    }
  }
  return span.basis;
}

std::vector<DVec> complement_within(const std::vector<DVec>& whole,
                                    const std::vector<DVec>& part) {
  SpanBasis span;
  for (const DVec& v : part) span.add(v);
  size_t part_sz = span.basis.size();
  std::vector<DVec> out;
  for (const DVec& v : whole)
    if (span.add(v)) out.push_back(span.basis.back());
  (void)part_sz;
  return out;
}

}  // namespace

WoldReport wold_classify(const Rep& rep, Cplx q0, int order, double tol) {
  RelationResiduals res = relation_residuals(rep, q0, order);
  if (res.max() > tol)
    throw DomainError("relation residuals exceed tolerance; refusing to classify");

  const double null_tol = 1e-8;
  auto mask = rep.interior_mask(order);
  WoldReport report;
  report.interior_dim = rep.interior_dim(order);
  if (report.interior_dim == 0) return report;

  DMat Qd = DMat(rep.Q());
  DMat Pd = DMat(rep.P());
  DMat I = DMat::Identity(rep.dim, rep.dim);

  std::vector<DVec> interior;
  for (Eigen::Index i = 0; i < rep.dim; ++i) {
    if (!mask[i]) continue;
    DVec e = DVec::Zero(rep.dim);
    e(i) = Cplx{1.0, 0.0};
    interior.push_back(e);
  }

  std::vector<const SpMat*> s_gens, all_gens;
  for (const auto& Sj : rep.S) s_gens.push_back(&Sj);
  all_gens = s_gens;
  for (const auto& Tr : rep.T) all_gens.push_back(&Tr);

  // ker Q and its S-closure: the s-Fock part of the interior.
  std::vector<DVec> kerQ = kernel_within(Qd, interior, null_tol);
  std::vector<DVec> s_fock = closure(kerQ, s_gens, mask);

  // Within ker Q, the t-vacuum vectors; their full closure is H1.
  std::vector<DVec> kerQP = kernel_within(Pd, kerQ, null_tol);
  std::vector<DVec> h1 = closure(kerQP, all_gens, mask);
  report.h1 = static_cast<Eigen::Index>(h1.size());

  // H3: the s-Fock part not reached from a joint vacuum.
  std::vector<DVec> h3 = complement_within(s_fock, h1);
  report.h3 = static_cast<Eigen::Index>(h3.size());

  // Remainder: Q acts as the identity there.
  std::vector<DVec> rest = complement_within(interior, s_fock);
  std::vector<DVec> kerP_rest = kernel_within(Pd, rest, null_tol);
  std::vector<DVec> h2 = closure(kerP_rest, all_gens, mask);
  report.h2 = static_cast<Eigen::Index>(h2.size());

  std::vector<DVec> h4 = complement_within(rest, h2);
  report.h4 = static_cast<Eigen::Index>(h4.size());
  return report;
}

void write_matrix_market(const SpMat& A, std::ostream& os) {
  os << "%%MatrixMarket matrix coordinate complex general\n";
  os << A.rows() << " " << A.cols() << " " << A.nonZeros() << "\n";
  std::ostringstream body;
  body.precision(17);
  for (int k = 0; k < A.outerSize(); ++k)
    for (SpMat::InnerIterator it(A, k); it; ++it)
      body << (it.row() + 1) << " " << (it.col() + 1) << " " << it.value().real()
           << " " << it.value().imag() << "\n";
  os << body.str();
}

SpMat read_matrix_market(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("%%MatrixMarket", 0) != 0)
    throw ConfigError("not a MatrixMarket stream");
  do {
    if (!std::getline(is, line)) throw ConfigError("truncated MatrixMarket stream");
  } while (!line.empty() && line[0] == '%');
  std::istringstream header(line);
  Eigen::Index rows, cols, nnz;
  header >> rows >> cols >> nnz;
  std::vector<Eigen::Triplet<Cplx>> trips;
  for (Eigen::Index k = 0; k < nnz; ++k) {
    Eigen::Index r, c;
    double re, im;
    is >> r >> c >> re >> im;
    trips.emplace_back(r - 1, c - 1, Cplx{re, im});
  }
  return sparse_from_triplets(rows, cols, trips);
}

}  // namespace qcuntz
