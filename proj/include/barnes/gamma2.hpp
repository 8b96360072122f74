#pragma once

// Barnes' symmetric double gamma function
//   Gamma_2(z; w1, w2) = (2 pi)^{z/(2 w1)} w2^{-z^2/(2 w1 w2) + z (w1 + w2)/(2 w1 w2) - 1} / G(z/w1; w2/w1)
// valid for |arg w1 - arg w2| < pi, principal powers.

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <sstream>

#include "barnes/double_gamma.hpp"

namespace barnes {

template <std::floating_point Real>
void require_gamma2_periods(Complex<Real> w1, Complex<Real> w2) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  const bool ok = std::abs(w1) > 0 && std::abs(w2) > 0 && std::abs(std::arg(w1)) < pi &&
                  std::abs(std::arg(w2)) < pi && std::abs(std::arg(w1) - std::arg(w2)) < pi;
  if (!ok) {
    std::ostringstream os;
    os << "gamma2: periods " << w1 << ", " << w2 << " violate |arg w1 - arg w2| < pi";
    throw domain_error(os.str());
  }
}

template <std::floating_point Real>
EvalResult<Real> gamma2(Complex<Real> z, Complex<Real> w1, Complex<Real> w2, const ComputeParams& params = {}) {
  require_gamma2_periods(w1, w2);
  const Complex<Real> tau = w2 / w1;
  EvalResult<Real> g = log_double_gamma(Complex<Real>(z / w1), tau, params);
  const Complex<Real> e = -z * z / (Real(2) * w1 * w2) + z * (w1 + w2) / (Real(2) * w1 * w2) - Real(1);
  const Real ln2pi = std::log(2 * std::numbers::pi_v<Real>);
  EvalResult<Real> r = g;
  r.log_value = z / (Real(2) * w1) * ln2pi + e * std::log(w2) - g.log_value;
  r.value = std::exp(r.log_value);
  return r;
}

}  // namespace barnes
