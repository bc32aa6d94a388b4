#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcuntz/core/errors.hpp"

namespace qcuntz {

/// Exact Gaussian rational a + b*i.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return GaussianRational(0, 1); }
  static GaussianRational of(long num_re, long den_re, long num_im = 0, long den_im = 1) {
    return GaussianRational(mpq_class(num_re, den_re), mpq_class(num_im, den_im));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
  GaussianRational operator+(const GaussianRational& o) const {
    return GaussianRational(re_ + o.re_, im_ + o.im_);
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return GaussianRational(re_ - o.re_, im_ - o.im_);
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return GaussianRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  std::string str() const;

 private:
  mpq_class re_, im_;
};

enum class VarMode : uint8_t { SingleGeneric, SingleUnimodular, MultiUnimodular };

/// The formal deformation variables available to coefficients.
///
/// SingleGeneric keeps q and its formal conjugate qc independent (exponents
/// are non-negative); SingleUnimodular identifies qc with q^-1; MultiUnimodular
/// carries one unimodular variable q[i,j] per generator pair.
struct DeformVars {
  VarMode mode = VarMode::SingleUnimodular;
  int n = 0, m = 0;  // used in MultiUnimodular mode only

  static DeformVars single_generic() { return {VarMode::SingleGeneric, 0, 0}; }
  static DeformVars single_unimodular() { return {VarMode::SingleUnimodular, 0, 0}; }
  static DeformVars multi_unimodular(int n, int m) {
    if (n < 1 || m < 1) throw ConfigError("multi_unimodular requires n, m >= 1");
    return {VarMode::MultiUnimodular, n, m};
  }

  int var_count() const {
    switch (mode) {
      case VarMode::SingleGeneric: return 2;  // q, qc
      case VarMode::SingleUnimodular: return 1;
      case VarMode::MultiUnimodular: return n * m;
    }
    return 0;
  }

  bool unimodular() const { return mode != VarMode::SingleGeneric; }

  bool operator==(const DeformVars&) const = default;
};

/// Numeric values for the formal variables.
class VarAssignment {
 public:
  static VarAssignment single(std::complex<double> q0) {
    VarAssignment a;
    a.single_ = true;
    a.values_ = {q0};
    return a;
  }
  /// Row-major values q[i][j], i = 1..n outer, j = 1..m inner.
  static VarAssignment multi(int n, int m, std::vector<std::complex<double>> vals) {
    if (static_cast<int>(vals.size()) != n * m)
      throw ConfigError("assignment needs n*m values");
    VarAssignment a;
    a.single_ = false;
    a.n_ = n;
    a.m_ = m;
    a.values_ = std::move(vals);
    return a;
  }
  static VarAssignment constant_multi(int n, int m, std::complex<double> q0) {
    return multi(n, m, std::vector<std::complex<double>>(n * m, q0));
  }

  bool is_single() const { return single_; }
  std::complex<double> q() const {
    if (!single_) throw ConfigError("single-parameter value requested from multi assignment");
    return values_[0];
  }
  std::complex<double> qij(int i, int j) const {  // 1-based
    if (single_) return values_[0];
    return values_[(i - 1) * m_ + (j - 1)];
  }

 private:
  bool single_ = true;
  int n_ = 0, m_ = 0;
  std::vector<std::complex<double>> values_;
};

/// Exact coefficient: finite sum of Gaussian rationals times Laurent monomials
/// in the deformation variables.  Zero terms are never stored; exponent
/// vectors are canonical per mode.
class PhaseCoeff {
 public:
  using Exponents = std::vector<int>;

  explicit PhaseCoeff(DeformVars vars) : vars_(vars) {}

  static PhaseCoeff zero(const DeformVars& v) { return PhaseCoeff(v); }
  static PhaseCoeff one(const DeformVars& v) { return scalar(v, GaussianRational(1)); }
  static PhaseCoeff scalar(const DeformVars& v, GaussianRational c) {
    PhaseCoeff p(v);
    p.insert(Exponents(v.var_count(), 0), std::move(c));
    return p;
  }
  /// q^k.  In generic mode k must be non-negative.
  static PhaseCoeff q_power(const DeformVars& v, int k);
  /// (q-bar)^k, i.e. qc^k in generic mode and q^-k in unimodular mode.
  static PhaseCoeff qc_power(const DeformVars& v, int k);
  /// q[i,j]^k in multi mode (1-based indices).
  static PhaseCoeff qij_power(const DeformVars& v, int i, int j, int k);

  const DeformVars& vars() const { return vars_; }
  const std::map<Exponents, GaussianRational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->second.is_one() &&
           exponents_zero(terms_.begin()->first);
  }

  PhaseCoeff operator+(const PhaseCoeff& o) const;
  PhaseCoeff operator-(const PhaseCoeff& o) const;
  PhaseCoeff operator*(const PhaseCoeff& o) const;
  PhaseCoeff operator-() const;
  PhaseCoeff conj() const;
  bool operator==(const PhaseCoeff& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const PhaseCoeff& o) const { return !(*this == o); }

  /// Evaluate at a numeric assignment.  Unimodular variables must be given
  /// values with | |v| - 1 | <= 1e-12; generic qc is forced to conj(q).
  std::complex<double> specialize(const VarAssignment& a) const;

  std::string str() const;

 private:
  static bool exponents_zero(const Exponents& e);
  void check_same(const PhaseCoeff& o) const {
    if (!(vars_ == o.vars_)) throw ConfigError("coefficient mode mismatch");
  }
  void insert(Exponents e, GaussianRational c);

  DeformVars vars_;
  std::map<Exponents, GaussianRational> terms_;
};

}  // namespace qcuntz
