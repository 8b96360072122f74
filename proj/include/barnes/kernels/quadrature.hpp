#pragma once

// Quadrature used by the integral oracles: an exp-sinh (double-exponential)
// rule for integrals over (0, inf) and Gauss-Legendre nodes for finite boxes.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "barnes/errors.hpp"
#include "barnes/kernels/complex_util.hpp"

namespace barnes {

struct QuadratureSpec {
  double target = 1e-12;  // absolute
  int max_level = 10;     // step 2^{-level}
};

namespace detail {

/// One-sided trapezoid sum of the transformed integrand over t = t0 + k*step,
/// k = 0, 1, 2, ... in direction `dir`, stopping once terms are negligible.
template <std::floating_point Real, typename F>
Complex<Real> exp_sinh_ray(F& f, Real t0, Real step, int dir, Real scale_hint) {
  constexpr Real half_pi = std::numbers::pi_v<Real> / 2;
  const Real tiny = std::numeric_limits<Real>::epsilon() * Real(1e-4);
  CompensatedSum<Real> s;
  int quiet = 0;
  for (long k = 0;; ++k) {
    const Real t = t0 + dir * step * Real(k);
    const Real u = half_pi * std::sinh(t);
    if (u > Real(690) || u < Real(-690)) break;
    const Real x = std::exp(u);
    const Real w = x * half_pi * std::cosh(t);
    const Complex<Real> term = Complex<Real>(f(x)) * w;
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
      std::ostringstream os;
      os << "integrate_semiaxis: integrand not finite at x = " << x;
      throw convergence_error(os.str());
    }
    s += term;
    const Real mag = std::abs(term);
    const Real ref = std::max(std::abs(s.value()), scale_hint);
    quiet = (mag <= tiny * ref || mag < std::numeric_limits<Real>::min()) ? quiet + 1 : 0;
    if (quiet >= 3) break;
  }
  return s.value();
}

}  // namespace detail

/// int_0^inf f(x) dx by the exp-sinh substitution x = exp((pi/2) sinh t) and
/// trapezoid sums whose step is halved until two levels agree to spec.target.
/// f must accept a Real and return something convertible to Complex<Real>;
/// it is never called at x = 0.
template <std::floating_point Real, typename F>
Complex<Real> integrate_semiaxis(F&& f, const QuadratureSpec& spec = {}) {
  if (!(spec.target >= 10 * std::numeric_limits<Real>::epsilon()))
    throw precondition_error("integrate_semiaxis: target below 10 x unit roundoff");
  if (spec.max_level < 1) throw precondition_error("integrate_semiaxis: max_level must be positive");

  // Level 0: step 1 over all integers.
  Real h = 1;
  Complex<Real> partial = detail::exp_sinh_ray<Real>(f, Real(0), h, +1, Real(0));
  partial += detail::exp_sinh_ray<Real>(f, -h, h, -1, std::abs(partial));
  Complex<Real> estimate = partial * h;
  for (int level = 1; level <= spec.max_level; ++level) {
    // New nodes are the odd multiples of the halved step.
    const Real hn = h / 2;
    Complex<Real> odd = detail::exp_sinh_ray<Real>(f, hn, h, +1, std::abs(partial));
    odd += detail::exp_sinh_ray<Real>(f, -hn, h, -1, std::abs(partial));
    partial += odd;
    h = hn;
    const Complex<Real> next = partial * h;
    const Real diff = std::abs(next - estimate);
    estimate = next;
    if (level >= 2 && diff <= Real(spec.target)) return estimate;
  }
  std::ostringstream os;
  os << "integrate_semiaxis: no agreement within " << spec.target << " after " << spec.max_level << " levels";
  throw convergence_error(os.str());
}

/// Gauss-Legendre nodes and weights on [0, 1].
template <std::floating_point Real>
std::vector<std::pair<Real, Real>> gauss_legendre(std::size_t n) {
  if (n == 0) throw domain_error("gauss_legendre: need at least one node");
  std::vector<std::pair<Real, Real>> out(n);
  constexpr Real pi = std::numbers::pi_v<Real>;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    Real x = std::cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    Real dp = 0;
    for (int it = 0; it < 100; ++it) {
      Real p0 = 1, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const Real p2 = ((2 * Real(k) - 1) * x * p1 - (Real(k) - 1) * p0) / Real(k);
        p0 = p1;
        p1 = p2;
      }
      dp = Real(n) * (x * p1 - p0) / (x * x - 1);
      const Real dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= std::numeric_limits<Real>::epsilon() * 2) break;
    }
    const Real w = 2 / ((1 - x * x) * dp * dp);
    out[i] = {(1 - x) / 2, w / 2};
    out[n - 1 - i] = {(1 + x) / 2, w / 2};
  }
  return out;
}

}  // namespace barnes
