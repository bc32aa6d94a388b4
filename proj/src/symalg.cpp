#include "qcuntz/core/symalg.hpp"

namespace qcuntz {

NumElement specialize(const Element& x, const VarAssignment& a) {
  NumericCoeffs ring{x.config().vars, a};
  NumElement out(x.config(), ring);
  for (const auto& [m, c] : x.terms()) out.add_term(m, c.specialize(a));
  return out;
}

double max_abs_coeff(const NumElement& x) {
  double mx = 0.0;
  for (const auto& [m, c] : x.terms()) mx = std::max(mx, std::abs(c));
  return mx;
}

double max_abs_diff(const NumElement& x, const NumElement& y) {
  return max_abs_coeff(x - y);
}

}  // namespace qcuntz
