#pragma once

// Large-z expansion of log G(z; tau):
//   (a2 z^2 + a1 z + a0) log z + b2 z^2 + b1 z + b0 + sum_n tail[n] z^{-n}
// and the constant term b0(tau).

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <vector>

#include "barnes/double_gamma.hpp"
#include "barnes/kernels/quadrature.hpp"

namespace barnes {

template <std::floating_point Real>
struct AsymptoticCoeffs {
  Complex<Real> a0, a1, a2;
  Complex<Real> b0, b1, b2;
  std::vector<Complex<Real>> tail;  // tail[n] multiplies z^{-n}; tail[0] is unused (zero)
};

/// a0 = tau/12 + 1/4 + 1/(12 tau)
template <std::floating_point Real>
Complex<Real> asymptotic_a0(Complex<Real> tau) {
  return tau / Real(12) + Real(0.25) + Real(1) / (Real(12) * tau);
}

/// b0 = (1/3){2 log G(1/2; tau) + log G(tau; 2 tau) - ((1+tau)/2) ln 2pi - a0 (3 log tau - ln 2) - ln 2}.
/// 3 log tau - ln 2 replaces log(tau^3/2) so that b0 stays analytic in tau.
template <std::floating_point Real>
Complex<Real> b0_of_tau(Complex<Real> tau, const ComputeParams& params = {}) {
  require_tau_off_cut(tau, "b0_of_tau");
  const Complex<Real> g_half = log_double_gamma(Complex<Real>(Real(0.5)), tau, params).log_value;
  const Complex<Real> g_tau = log_double_gamma(tau, Complex<Real>(Real(2) * tau), params).log_value;
  const Real ln2 = std::numbers::ln2_v<Real>;
  const Real ln2pi = std::log(2 * std::numbers::pi_v<Real>);
  return (Real(2) * g_half + g_tau - (Real(1) + tau) / Real(2) * ln2pi -
          asymptotic_a0(tau) * (Real(3) * std::log(tau) - ln2) - ln2) /
         Real(3);
}

/// Closed-form coefficients, b0 from b0_of_tau and tail[n] = (-1)^{n+1} q_{n+2}(tau) / (tau n (n+1) (n+2)).
template <std::floating_point Real>
AsymptoticCoeffs<Real> asymptotic_coeffs(Complex<Real> tau, std::size_t n_tail, const ComputeParams& params = {}) {
  require_tau_off_cut(tau, "asymptotic_coeffs");
  AsymptoticCoeffs<Real> c;
  const Complex<Real> lt = std::log(tau);
  const Real ln2pi = std::log(2 * std::numbers::pi_v<Real>);
  c.a2 = Real(1) / (Real(2) * tau);
  c.a1 = -(Real(1) + Real(1) / tau) / Real(2);
  c.a0 = asymptotic_a0(tau);
  c.b1 = ((Real(1) / tau + Real(1)) * (Real(1) + lt) + ln2pi) / Real(2);
  c.b2 = -(Real(1.5) + lt) / (Real(2) * tau);
  c.b0 = b0_of_tau(tau, params);
  c.tail.assign(n_tail + 1, Complex<Real>(0));
  for (std::size_t n = 1; n <= n_tail; ++n) {
    const Real sign = (n % 2 == 1) ? Real(1) : Real(-1);
    c.tail[n] = sign * q_poly(n + 2).eval(tau) / (tau * Real(n * (n + 1) * (n + 2)));
  }
  return c;
}

namespace detail {

/// Angular distance from arg z to the closed cone {-x - tau y : x, y >= 0}.
template <std::floating_point Real>
Real angle_to_zero_cone(Complex<Real> z, Complex<Real> tau) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  constexpr Real two_pi = 2 * pi;
  const Real th = std::arg(-tau);
  Real start, length;  // counter-clockwise arc
  if (tau.imag() > 0) {
    start = -pi;
    length = th + pi;
  } else if (tau.imag() < 0) {
    start = th;
    length = pi - th;
  } else {
    start = pi;
    length = 0;
  }
  Real phi = std::fmod(std::arg(z) - start, two_pi);
  if (phi < 0) phi += two_pi;
  if (phi <= length) return 0;
  return std::min(phi - length, two_pi - phi);
}

}  // namespace detail

inline constexpr double kSectorMargin = 0.2;

template <std::floating_point Real>
Complex<Real> log_double_gamma_asymptotic(Complex<Real> z, const AsymptoticCoeffs<Real>& c, Complex<Real> tau) {
  if (std::abs(z) == 0 || detail::angle_to_zero_cone(z, tau) < Real(kSectorMargin)) {
    std::ostringstream os;
    os << "log_double_gamma_asymptotic: z = " << z << " is within " << kSectorMargin
       << " rad of the zero cone of tau = " << tau;
    throw precondition_error(os.str());
  }
  const Complex<Real> lz = std::log(z);
  Complex<Real> s = (c.a2 * z * z + c.a1 * z + c.a0) * lz + c.b2 * z * z + c.b1 * z + c.b0;
  const Complex<Real> inv = Real(1) / z;
  Complex<Real> pw = inv;
  for (std::size_t n = 1; n < c.tail.size(); ++n) {
    s += c.tail[n] * pw;
    pw *= inv;
  }
  return s;
}

/// Large-z approximation of log G(z; tau), principal log z; agrees with the
/// canonical log only modulo 2 pi i.
template <std::floating_point Real>
Complex<Real> log_double_gamma_asymptotic(Complex<Real> z, Complex<Real> tau, std::size_t n_tail) {
  require_tau_off_cut(tau, "log_double_gamma_asymptotic");
  if (std::abs(z) == 0 || detail::angle_to_zero_cone(z, tau) < Real(kSectorMargin))
    return log_double_gamma_asymptotic(z, AsymptoticCoeffs<Real>{}, tau);  // throws
  return log_double_gamma_asymptotic(z, asymptotic_coeffs(tau, n_tail), tau);
}

/// int_0^1 int_0^1 log G(x + tau y; tau) dx dy by tensor Gauss-Legendre.  The
/// log singularity at the lattice zero w = 0 is removed first: log G(w) - log w
/// is smooth on the square and int int log(x + tau y) has the closed form
/// [F(1+tau) - F(1) - F(tau)]/tau with F(w) = w^2 log w / 2 - 3 w^2 / 4.
template <std::floating_point Real>
Complex<Real> log_g_unit_square_integral(Complex<Real> tau, std::size_t nodes = 32, const ComputeParams& params = {}) {
  require_tau_off_cut(tau, "log_g_unit_square_integral");
  const auto gl = gauss_legendre<Real>(nodes);
  ComputeParams p = params;
  if (p.auto_select) {
    p = choose_params(Complex<Real>(Real(1) + tau), tau, static_cast<Real>(params.target));
    p.auto_select = false;
  }
  if (p.m_cd <= 0) p.m_cd = default_em_length(tau);
  const ModularForms<Real> forms = detail::cached_modular_forms(tau, p.m_cd);
  detail::CompensatedSum<Real> s;
  for (auto [x, wx] : gl)
    for (auto [y, wy] : gl) {
      const Complex<Real> w = x + tau * y;
      s += (wx * wy) * (log_double_gamma(w, forms, p).log_value - std::log(w));
    }
  auto F = [](Complex<Real> w) { return w * w * std::log(w) / Real(2) - Real(0.75) * w * w; };
  const Complex<Real> closed = (F(Real(1) + tau) - F(Complex<Real>(1)) - F(tau)) / tau;
  return s.value() + closed;
}

}  // namespace barnes
