#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcuntz/core/symalg.hpp"

namespace qcuntz {

using Cplx = std::complex<double>;
using SpMat = Eigen::SparseMatrix<Cplx>;
using DMat = Eigen::MatrixXcd;
using DVec = Eigen::VectorXcd;

// ---------------------------------------------------------------------------
// Fock word indexing (graded lexicographic: by level, then lex within level)
// ---------------------------------------------------------------------------

/// Number of words of length <= L over d letters.
Eigen::Index fock_dim(int d, int L);

/// Index of a word (letters 1-based) in the graded lexicographic basis.
Eigen::Index fock_index(int d, const std::vector<int>& word);

/// Inverse of fock_index.
std::vector<int> fock_word(int d, int L, Eigen::Index index);

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

/// A (truncated) representation: matrices for the s- and t-generators plus
/// per-basis-vector interior depth.  `depth[i] >= r` means products of up to
/// r generators act on basis vector i exactly as in the untruncated model.
struct Rep {
  int n = 0, m = 0;
  Eigen::Index dim = 0;
  std::vector<SpMat> S, T;
  std::vector<int> depth;
  std::string space;

  std::vector<char> interior_mask(int order) const;
  Eigen::Index interior_dim(int order) const;
  SpMat interior_projector(int order) const;

  SpMat Q() const;  // sum_j S_j S_j^*
  SpMat P() const;  // sum_r T_r T_r^*

  const SpMat& op(Letter l) const {
    return l.family == Letter::S ? S[l.index - 1] : T[l.index - 1];
  }
};

enum class FockForm { A, B, C };

/// Tensor Fock representation on F_n (x) F_m, truncated at levels N, M.
/// Requires |q0| = 1.  The square-root branch is exp(i*pi*phi0) for
/// q0 = exp(2*pi*i*phi0), phi0 in [0,1).
Rep build_fock_rep(int n, int m, int N, int M, Cplx q0, FockForm form);

/// Untruncated n = m = 1 model from a commuting clock/shift pair on C^K;
/// requires q0^K = 1.  Both range projections equal the identity.
Rep clock_shift_rep(int K, Cplx q0);

enum class BlockKind { QFull_PFock, QFock_PFull };

/// Synthetic n = m = 1 blocks: one generator a diagonal unitary, the other a
/// truncated shift.  QFull_PFock has Q = 1 and P of Fock type; QFock_PFull
/// the reverse.
Rep synthetic_block_rep(BlockKind kind, int K, Cplx q0);

Rep direct_sum(const Rep& a, const Rep& b);

/// Concrete multiparameter representation on l2 x l2 x l2(window), with
/// digit shift maps and the diagonal phase cocycle.  qmat is n x m with
/// unimodular entries.
Rep concrete_theta_rep(int n, int m, const DMat& qmat, int N, int M, int W);

/// Closed form of the phase cocycle used by concrete_theta_rep.
Cplx theta_zeta(const DMat& qmat, int i, int m, long k, long w);

// ---------------------------------------------------------------------------
// Relation residuals and evaluation
// ---------------------------------------------------------------------------

/// Max column norm of A restricted to the interior columns of the given order.
double residual_on_interior(const SpMat& A, const Rep& rep, int order);

struct RelationResiduals {
  double ss = 0, tt = 0, st = 0, ts = 0;
  double max() const { return std::max(std::max(ss, tt), std::max(st, ts)); }
};

/// Residuals of s_i^* s_j - delta, t_r^* t_l - delta, s_j^* t_r - q t_r s_j^*
/// and t_r s_j - q s_j t_r on the interior of the given order.
RelationResiduals relation_residuals(const Rep& rep, Cplx q0, int order = 2);

/// Multiparameter version: adds s_i t_j - q_ij t_j s_i and the two range sums.
double theta_relation_residual(const Rep& rep, const DMat& qmat, int order = 2);

SpMat evaluate(const NumElement& x, const Rep& rep);
SpMat evaluate(const Element& x, const Rep& rep, const VarAssignment& a);
SpMat evaluate_raw(const RawWord& w, const Rep& rep);

/// Conjugation by the diagonal grading unitaries: S_j -> z1 S_j, T_r -> z2 T_r.
Rep gauge_scaled(const Rep& rep, Cplx z1, Cplx z2);

// ---------------------------------------------------------------------------
// Wick operator
// ---------------------------------------------------------------------------

/// The Wick coefficient operator on C^{n+m} (x) C^{n+m}.
DMat wick_T(int n, int m, Cplx q0);

double operator_norm(const DMat& A);

/// || (1 (x) T)(T (x) 1)(1 (x) T) - (T (x) 1)(1 (x) T)(T (x) 1) ||.
double braid_residual(const DMat& T, int d);

// ---------------------------------------------------------------------------
// Wold decomposition
// ---------------------------------------------------------------------------

struct WoldReport {
  Eigen::Index interior_dim = 0;
  Eigen::Index h1 = 0, h2 = 0, h3 = 0, h4 = 0;
  Eigen::Index unclassified() const { return interior_dim - h1 - h2 - h3 - h4; }
};

/// Classifies the interior of a representation into the four Wold parts.
/// Throws DomainError when the relation residuals exceed tol.
WoldReport wold_classify(const Rep& rep, Cplx q0, int order, double tol);

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

void write_matrix_market(const SpMat& A, std::ostream& os);
SpMat read_matrix_market(std::istream& is);

}  // namespace qcuntz
