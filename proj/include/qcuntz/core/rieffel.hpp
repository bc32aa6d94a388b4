#pragma once

#include <Eigen/Dense>

#include "qcuntz/core/fockrep.hpp"
#include "qcuntz/core/symalg.hpp"

namespace qcuntz {

/// Skew matrix (0, theta; -theta, 0) attached to q = exp(2*pi*i*phi0),
/// theta = phi0 / 2 with phi0 in [0, 1).  Requires |q0| = 1.
Eigen::Matrix2d theta_from_q(Cplx q0);

/// exp(2*pi*i <Theta p, r>) for integer degrees p, r.
Cplx twist_phase(const Eigen::Matrix2d& theta, Eigen::Vector2i p, Eigen::Vector2i r);

/// Integer height h(p, r) = p2 r1 - p1 r2; for the standard skew matrix the
/// twist phase is exp(2*pi*i * theta12 * h).
long long twist_height(Eigen::Vector2i p, Eigen::Vector2i r);

// ---------------------------------------------------------------------------
// Exact layer: phases tracked as rational turns (multiples of a full circle)
// ---------------------------------------------------------------------------

/// A homogeneous element together with an exact phase exp(2*pi*i*turns).
/// Products in the deformed algebra accumulate turns; cancellations are
/// decided by exact rational arithmetic.
struct GradedExact {
  Eigen::Vector2i degree;
  Element elem;
  mpq_class turns = 0;
};

/// Validates that elem is homogeneous of the declared degree.
GradedExact make_graded(Eigen::Vector2i degree, Element elem, mpq_class turns = 0);

/// Twisted product with Theta = sign * Theta_q for phi0 given as exact turns.
GradedExact twisted_mul(const GradedExact& a, const GradedExact& b,
                        const mpq_class& phi0, int sign = +1);

/// Phase equality modulo full turns.
bool same_phase(const mpq_class& t1, const mpq_class& t2);

// ---------------------------------------------------------------------------
// Numeric layer: deformed representations
// ---------------------------------------------------------------------------

/// Grading of the Hilbert space basis required by deform_rep.
using BasisDegrees = std::vector<Eigen::Vector2i>;

BasisDegrees pair_basis_degrees(int n, int N, int m, int M);

/// Deforms a graded representation: each generator of degree p acts on the
/// degree-r subspace with the extra phase exp(2*pi*i <Theta p, r>).
Rep deform_rep(const Rep& rep, const BasisDegrees& degrees, const Eigen::Matrix2d& theta);

/// The undeformed pair model: s_j = a_j (x) 1, t_r = 1 (x) a_r on F_n (x) F_m.
Rep plain_pair_rep(int n, int m, int N, int M);

/// Max entry deviation between the generator matrices of two representations.
double rep_deviation(const Rep& a, const Rep& b);

/// Crossed-product untwist check: on the q = 1 pair model with the grading
/// unitary u = d_n(e^{i pi phi0}) (x) d_m(e^{-i pi phi0}), the operators
/// shat_j = stilde_j u and that_r = ttilde_r u satisfy the twisted relations
/// and the u-commutation identities.  Returns the max residual on the
/// interior of order 2.
struct CrossedUntwistResiduals {
  double isometries = 0;   // shat*shat - delta, that*that - delta
  double cross_st = 0;     // shat_j^* that_r - q that_r shat_j^*
  double cross_ts = 0;     // that_r shat_j - q shat_j that_r
  double u_comm = 0;       // u shat_j u^* - e^{i pi phi0} shat_j, and the t analogue
  double max() const {
    return std::max(std::max(isometries, cross_st), std::max(cross_ts, u_comm));
  }
};

CrossedUntwistResiduals crossed_untwist_check(int n, int m, Cplx q0, int N, int M);

}  // namespace qcuntz
