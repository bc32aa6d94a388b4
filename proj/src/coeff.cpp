#include "qcuntz/core/coeff.hpp"

#include <cmath>
#include <sstream>

namespace qcuntz {

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::complex<double> pow_int(std::complex<double> z, int k) {
  if (k == 0) return {1.0, 0.0};
  bool inv = k < 0;
  unsigned long e = inv ? static_cast<unsigned long>(-(long)k) : static_cast<unsigned long>(k);
  std::complex<double> acc{1.0, 0.0}, base = z;
  while (e) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1UL;
  }
  return inv ? 1.0 / acc : acc;
}

}  // namespace

std::string GaussianRational::str() const {
  if (im_ == 0) return rational_str(re_);
  std::string imag = rational_str(im_);
  if (imag == "1")
    imag = "i";
  else if (imag == "-1")
    imag = "-i";
  else
    imag += "i";
  if (re_ == 0) return imag;
  std::string out = "(" + rational_str(re_);
  if (imag[0] != '-') out += "+";
  out += imag + ")";
  return out;
}

PhaseCoeff PhaseCoeff::q_power(const DeformVars& v, int k) {
  PhaseCoeff p(v);
  Exponents e(v.var_count(), 0);
  switch (v.mode) {
    case VarMode::SingleGeneric:
      if (k < 0) throw ConfigError("negative q power is not defined in generic mode");
      e[0] = k;
      break;
    case VarMode::SingleUnimodular:
      e[0] = k;
      break;
    case VarMode::MultiUnimodular:
      throw ConfigError("single-parameter q requested in multiparameter mode");
  }
  p.insert(std::move(e), GaussianRational(1));
  return p;
}

PhaseCoeff PhaseCoeff::qc_power(const DeformVars& v, int k) {
  PhaseCoeff p(v);
  Exponents e(v.var_count(), 0);
  switch (v.mode) {
    case VarMode::SingleGeneric:
      if (k < 0) throw ConfigError("negative qc power is not defined in generic mode");
      e[1] = k;
      break;
    case VarMode::SingleUnimodular:
      e[0] = -k;
      break;
    case VarMode::MultiUnimodular:
      throw ConfigError("single-parameter qc requested in multiparameter mode");
  }
  p.insert(std::move(e), GaussianRational(1));
  return p;
}

PhaseCoeff PhaseCoeff::qij_power(const DeformVars& v, int i, int j, int k) {
  if (v.mode != VarMode::MultiUnimodular)
    throw ConfigError("q[i,j] requested outside multiparameter mode");
  if (i < 1 || i > v.n || j < 1 || j > v.m) throw ConfigError("q[i,j] index out of range");
  PhaseCoeff p(v);
  Exponents e(v.var_count(), 0);
  e[(i - 1) * v.m + (j - 1)] = k;
  p.insert(std::move(e), GaussianRational(1));
  return p;
}

bool PhaseCoeff::exponents_zero(const Exponents& e) {
  for (int x : e)
    if (x != 0) return false;
  return true;
}

void PhaseCoeff::insert(Exponents e, GaussianRational c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhaseCoeff PhaseCoeff::operator+(const PhaseCoeff& o) const {
  check_same(o);
  PhaseCoeff out = *this;
  for (const auto& [e, c] : o.terms_) out.insert(e, c);
  return out;
}

PhaseCoeff PhaseCoeff::operator-(const PhaseCoeff& o) const {
  check_same(o);
  PhaseCoeff out = *this;
  for (const auto& [e, c] : o.terms_) out.insert(e, -c);
  return out;
}

PhaseCoeff PhaseCoeff::operator-() const {
  PhaseCoeff out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

PhaseCoeff PhaseCoeff::operator*(const PhaseCoeff& o) const {
  check_same(o);
  PhaseCoeff out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.insert(std::move(e), ca * cb);
    }
  }
  return out;
}

PhaseCoeff PhaseCoeff::conj() const {
  PhaseCoeff out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents ec = e;
    if (vars_.mode == VarMode::SingleGeneric) {
      std::swap(ec[0], ec[1]);  // conj swaps q and qc
    } else {
      for (auto& x : ec) x = -x;  // unimodular: conj is inversion
    }
    out.insert(std::move(ec), c.conj());
  }
  return out;
}

std::complex<double> PhaseCoeff::specialize(const VarAssignment& a) const {
  const double utol = 1e-12;
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    switch (vars_.mode) {
      case VarMode::SingleGeneric: {
        std::complex<double> q = a.q();
        t *= pow_int(q, e[0]) * pow_int(std::conj(q), e[1]);
        break;
      }
      case VarMode::SingleUnimodular: {
        std::complex<double> q = a.q();
        if (std::abs(std::abs(q) - 1.0) > utol)
          throw DomainError("unimodular variable assigned non-unimodular value");
        t *= pow_int(q, e[0]);
        break;
      }
      case VarMode::MultiUnimodular: {
        for (int i = 1; i <= vars_.n; ++i) {
          for (int j = 1; j <= vars_.m; ++j) {
            int k = e[(i - 1) * vars_.m + (j - 1)];
            if (k == 0) continue;
            std::complex<double> q = a.qij(i, j);
            if (std::abs(std::abs(q) - 1.0) > utol)
              throw DomainError("unimodular variable assigned non-unimodular value");
            t *= pow_int(q, k);
          }
        }
        break;
      }
    }
    sum += t;
  }
  return sum;
}

std::string PhaseCoeff::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mon;
    switch (vars_.mode) {
      case VarMode::SingleGeneric:
        if (e[0] != 0) mon += (e[0] == 1) ? "q" : "q^" + std::to_string(e[0]);
        if (e[1] != 0) {
          if (!mon.empty()) mon += "*";
          mon += (e[1] == 1) ? "qc" : "qc^" + std::to_string(e[1]);
        }
        break;
      case VarMode::SingleUnimodular:
        if (e[0] != 0) mon += (e[0] == 1) ? "q" : "q^" + std::to_string(e[0]);
        break;
      case VarMode::MultiUnimodular:
        for (int i = 1; i <= vars_.n; ++i) {
          for (int j = 1; j <= vars_.m; ++j) {
            int k = e[(i - 1) * vars_.m + (j - 1)];
            if (k == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += "q[" + std::to_string(i) + "," + std::to_string(j) + "]";
            if (k != 1) mon += "^" + std::to_string(k);
          }
        }
        break;
    }
    std::string cs = c.str();
    std::string term;
    if (mon.empty()) {
      term = cs;
    } else if (c.is_one()) {
      term = mon;
    } else if ((-c).is_one()) {
      term = "-" + mon;
    } else {
      term = cs + "*" + mon;
    }
    if (!first) {
      if (!term.empty() && term[0] == '-') {
        os << " - " << term.substr(1);
      } else {
        os << " + " << term;
      }
    } else {
      os << term;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qcuntz
