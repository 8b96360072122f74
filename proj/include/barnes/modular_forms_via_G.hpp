#pragma once

// C(tau) and D(tau) from derivatives of log G(z; tau) at z = tau:
//   C = -((tau - 1)/(2 tau)) log tau + ln(2 pi)/2 - d/dz log G
//   D = -(log tau)/tau - d^2/dz^2 log G
// The derivatives are fourth-order central differences of the canonical log
// with step h = 1e-3 max(1, |tau|).

#include <algorithm>
#include <array>
#include <complex>
#include <concepts>
#include <numbers>

#include "barnes/double_gamma.hpp"

namespace barnes {

namespace detail {

template <std::floating_point Real>
Real derivative_step(Complex<Real> tau) {
  return Real(1e-3) * std::max(Real(1), std::abs(tau));
}

/// log G at tau + j h, j = -2..2, sharing one parameter choice so the
/// differences see a smooth function of z.
template <std::floating_point Real>
std::array<Complex<Real>, 5> log_g_stencil(Complex<Real> tau, Real h, ComputeParams params) {
  if (params.auto_select) {
    const Complex<Real> zmax = tau + Complex<Real>(2 * h);
    params = choose_params(zmax, tau, static_cast<Real>(params.target));
    params.auto_select = false;
  }
  std::array<Complex<Real>, 5> f;
  for (int j = -2; j <= 2; ++j) f[j + 2] = log_double_gamma(Complex<Real>(tau + Real(j) * h), tau, params).log_value;
  return f;
}

}  // namespace detail

template <std::floating_point Real>
Complex<Real> C_via_logG_derivative(Complex<Real> tau, ComputeParams params = {}) {
  require_tau_off_cut(tau, "C_via_logG_derivative");
  const Real h = detail::derivative_step(tau);
  const auto f = detail::log_g_stencil(tau, h, params);
  const Complex<Real> d1 = (-f[4] + Real(8) * f[3] - Real(8) * f[1] + f[0]) / (Real(12) * h);
  const Complex<Real> lt = std::log(tau);
  return -(tau - Real(1)) / (Real(2) * tau) * lt + std::log(2 * std::numbers::pi_v<Real>) / Real(2) - d1;
}

template <std::floating_point Real>
Complex<Real> D_via_logG_derivative(Complex<Real> tau, ComputeParams params = {}) {
  require_tau_off_cut(tau, "D_via_logG_derivative");
  const Real h = detail::derivative_step(tau);
  const auto f = detail::log_g_stencil(tau, h, params);
  const Complex<Real> d2 = (-f[4] + Real(16) * f[3] - Real(30) * f[2] + Real(16) * f[1] - f[0]) / (Real(12) * h * h);
  return -std::log(tau) / tau - d2;
}

}  // namespace barnes
