#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "qcuntz/core/symalg.hpp"

namespace qcuntz {

/// Word-length profile (|mu|, |mu'|, |nu'|, |nu|) of a normal monomial
/// s_mu t_mu' t*_nu' s*_nu.
struct Profile {
  int a = 0, b = 0, c = 0, d = 0;

  auto operator<=>(const Profile&) const = default;

  bool dominates(const Profile& o) const {
    return a >= o.a && b >= o.b && c >= o.c && d >= o.d;
  }
  std::pair<int, int> degree() const { return {a - d, b - c}; }
  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + "," + std::to_string(d) + ")";
  }
};

Profile profile_of(const Monomial& m);

/// All words of exact length `len` over letters 1..k, lexicographic.
std::vector<Word> words_of_length(int k, int len, Letter::Family family);

// ---------------------------------------------------------------------------
// Cuntz-quotient canonical forms
// ---------------------------------------------------------------------------

enum class QuotientKind {
  Full,   // both range sums equal 1
  SOnly,  // sum_j s_j s_j^* = 1 only
  TOnly,  // sum_r t_r t_r^* = 1 only
};

/// Rewrites x at the target profile by inserting the corresponding sum of
/// range projections between the creation and annihilation parts.  The target
/// must dominate every monomial profile and respect its degree.  Requires a
/// unimodular mode.
template <class R>
BasicElement<R> raise_profile(const BasicElement<R>& x, Profile target,
                              QuotientKind kind = QuotientKind::Full);

/// Canonical quotient form: per graded component, every monomial raised to
/// the componentwise maximal profile present.
template <class R>
BasicElement<R> quotient_canonical(const BasicElement<R>& x,
                                   QuotientKind kind = QuotientKind::Full);

bool quotient_equal(const Element& x, const Element& y,
                    QuotientKind kind = QuotientKind::Full);
bool quotient_is_zero(const Element& x, QuotientKind kind = QuotientKind::Full);

/// Max canonical-coefficient deviation between numeric quotient elements.
double quotient_max_dev(const NumElement& x, const NumElement& y);
double quotient_norm(const NumElement& x);

// ---------------------------------------------------------------------------
// Matrix realization of the balanced profile spaces
// ---------------------------------------------------------------------------

/// Matrix of a degree-(0,0) element raised to profile (k,l,l,k); rows and
/// columns are indexed by pairs (mu, mu') with |mu| = k, |mu'| = l.
Eigen::MatrixXcd to_matrix(const NumElement& x, int k, int l);

NumElement from_matrix(const AlgebraConfig& cfg, const VarAssignment& a,
                       const Eigen::MatrixXcd& M, int k, int l);

/// The quotient-level matrix unit s_mu t_mu' t*_nu' s*_nu.
Element level_matrix_unit(const AlgebraConfig& cfg, const Word& mu, const Word& mup,
                          const Word& nup, const Word& nu);

// ---------------------------------------------------------------------------
// Implementing isometry and the pure-infiniteness witness
// ---------------------------------------------------------------------------

/// w = sum_{|delta|=k, |eps'|=l} s_delta t_eps' (s_1^{2k} s_2 t_1^{2l} t_2) t*_eps' s*_delta.
/// Requires n, m >= 2.
Element implementing_isometry(const AlgebraConfig& cfg, int k, int l);

struct WitnessResult {
  NumElement a, b;
  int r = 0;
  double top_eigenvalue = 0.0;
  double residual = 0.0;  // quotient norm of a*x*b - 1
};

/// Constructive witness: returns (a, b) with a x b = 1 in the quotient.
/// Throws DomainError when x is numerically zero.
WitnessResult pure_infinite_witness(const NumElement& x);

// ---------------------------------------------------------------------------
// Toeplitz-level matrix units and ideals
// ---------------------------------------------------------------------------

enum class UnitKind { S, T };

/// E_{mu nu} = s_mu (1 - Q) s_nu^* (S kind) or t_mu (1 - P) t_nu^* (T kind).
Element matrix_unit_toeplitz(const AlgebraConfig& cfg, UnitKind kind,
                             const Word& mu, const Word& nu);

struct IdealFlags {
  bool in_Iq = false, in_I1 = false, in_I2 = false, in_Mq = false;
};

/// Membership in the four ideals, decided by vanishing in the corresponding
/// quotients.  Requires a unimodular mode.
IdealFlags ideal_membership(const Element& x);

}  // namespace qcuntz
