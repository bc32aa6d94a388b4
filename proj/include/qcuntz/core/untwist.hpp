#pragma once

#include "qcuntz/core/fockrep.hpp"

namespace qcuntz {

/// The Toeplitz regime |q| < 1, realized on the truncated free Fock space over
/// n + m letters.  The first n generators play the role of the s-family; the
/// operators w_r are series-built isometries satisfying the twisted relations
/// v_i^* w_r = q w_r v_i^*, so (v, w) models the twisted algebra inside the
/// untwisted one.
struct UntwistModel {
  int n = 0, m = 0, L = 0;
  Cplx q0{0.0, 0.0};
  Rep free;      // generators v_1..v_{n+m}: free.S holds v_1..v_n, free.T the rest
  SpMat Qt;      // projection sum_{i<=n} v_i v_i^*
  std::vector<SpMat> wt;  // wt_r = v_{n+r} (1 - |q|^2 Qt)^{1/2}
  std::vector<SpMat> w;   // w_r  = sum_k sum_{|mu|=k} q^k v_mu wt_r v_mu^*

  const SpMat& v(int i) const {  // 1-based, i <= n+m
    return i <= n ? free.S[i - 1] : free.T[i - n - 1];
  }
  /// (1 - c Qt)^{power/2} by projection functional calculus, c = |q0|^2.
  SpMat sqrt_factor(int power) const;
};

/// Builds the free model and the w-generators; requires |q0| < 1.
UntwistModel build_untwist(int n, int m, Cplx q0, int L);

struct UntwistResiduals {
  double w_isometry = 0;   // w_r^* w_l - delta_rl
  double vw_relation = 0;  // v_i^* w_r - q w_r v_i^*
  double wt_recover = 0;   // (1 - Qt) w_r - wt_r
  double wtwt = 0;         // wt_r^* wt_l - delta_rl (1 - |q|^2 Qt)
  double max() const {
    return std::max(std::max(w_isometry, vw_relation), std::max(wt_recover, wtwt));
  }
};

UntwistResiduals untwist_residuals(const UntwistModel& model, int order = 2);

/// t-hat_r = (1 - Q) t_r (1 - |q|^2 Q)^{-1/2} built from s_i := v_i, t_r := w_r.
SpMat hat_generator(const UntwistModel& model, int r);

struct HatResiduals {
  double isometry = 0;  // that_r^* that_l - delta
  double s_orth = 0;    // v_i^* that_r
  double max() const { return std::max(isometry, s_orth); }
};

HatResiduals hat_residuals(const UntwistModel& model, int order = 2);

/// Round trip of the two generator maps: that_r rebuilt from (v, w) must equal
/// v_{n+r} on the interior.  Returns the max deviation.
double roundtrip_deviation(const UntwistModel& model, int order = 2);

/// Residual of the partial-sum identity
///   sum_{k<=N} q^k sum_{|mu|=k} s_mu ((1-Q) t_r) s_mu^*
///     = t_r - q^{N+1} sum_{|mu|=N+1} s_mu t_r s_mu^*
/// with s := v, t := w.
double partial_sum_residual(const UntwistModel& model, int r, int N, int order = 2);

/// True when every series term with |mu| > L is exactly the zero matrix.
bool series_terminates(const UntwistModel& model);

}  // namespace qcuntz
