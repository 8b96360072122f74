#pragma once

// The gamma modular forms C(tau), D(tau) and the constants a, b, a~, b~ that
// enter the Weierstrass and Gamma-product definitions of G(z; tau).
//
// Routes implemented here:
//   modular_forms_em    Euler-Maclaurin partial sums with psi^(k) tail corrections
//   C_via_integral      integral over (0, inf), Re tau > 0
//   D_via_integral      integral over (0, inf), Re tau > 0
// The log G derivative routes live in modular_forms_via_G.hpp because they
// need the evaluation engine.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <vector>

#include "barnes/errors.hpp"
#include "barnes/kernels/complex_util.hpp"
#include "barnes/kernels/elliptic.hpp"
#include "barnes/kernels/log_gamma.hpp"
#include "barnes/kernels/polygamma.hpp"
#include "barnes/kernels/quadrature.hpp"
#include "barnes/poly_core.hpp"

namespace barnes {

template <std::floating_point Real>
struct ModularForms {
  Complex<Real> C, D;
  Complex<Real> a, b;
  Complex<Real> a_tilde, b_tilde;
  Complex<Real> tau;
  long m_used = 0;
  Real error_estimate = 0;
};

/// Throws domain_error when tau lies on (-inf, 0].
template <std::floating_point Real>
void require_tau_off_cut(Complex<Real> tau, const char* who) {
  if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()) || (tau.imag() == 0 && tau.real() <= 0)) {
    std::ostringstream os;
    os << who << ": tau = " << tau << " lies on (-inf, 0]";
    throw domain_error(os.str());
  }
}

/// m = max(64, ceil(64 / |tau|)), so that |m tau| >= 64.
template <std::floating_point Real>
long default_em_length(Complex<Real> tau) {
  return std::max<long>(64, static_cast<long>(std::ceil(Real(64) / std::abs(tau))));
}

/// Fills a, b, a~, b~ from C and D.
///
/// a carries +gamma tau.  With the opposite sign the Gamma-product and
/// Weierstrass definitions of G disagree by exp(-2 gamma z); at tau = 1 the
/// Weierstrass product of the Barnes G-function fixes a(1) = gamma + ln(2 pi)/2 - 1/2.
template <std::floating_point Real>
void complete_modular_forms(ModularForms<Real>& f) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  constexpr Real euler = std::numbers::egamma_v<Real>;
  const Complex<Real> tau = f.tau;
  const Complex<Real> log_tau = std::log(tau);
  f.a = euler * tau + tau / Real(2) * (std::log(2 * pi) + log_tau) + log_tau / Real(2) - tau * f.C;
  f.b = -pi * pi * tau * tau / Real(6) - tau * log_tau - tau * tau * f.D;
  f.a_tilde = f.a - euler * tau;
  f.b_tilde = f.b + pi * pi * tau * tau / Real(6);
}

/// C and D by their Euler-Maclaurin expansions with m terms, including the
/// psi^(3), psi^(5), psi^(7) (resp. psi^(4), psi^(6), psi^(8)) corrections.
/// error_estimate is the larger magnitude of the two last correction terms.
template <std::floating_point Real>
ModularForms<Real> modular_forms_em(Complex<Real> tau, long m) {
  require_tau_off_cut(tau, "modular_forms_em");
  if (m < 1) throw precondition_error("modular_forms_em: m must be positive");
  const Complex<Real> w = Real(m) * tau;
  if (detail::distance_to_cut(w) < 1) {
    std::ostringstream os;
    os << "modular_forms_em: m tau = " << w << " is within distance 1 of (-inf, 0]; increase m";
    throw precondition_error(os.str());
  }
  const Real lm = std::log(Real(m));
  const Complex<Real> lt = std::log(tau);
  const Complex<Real> t2 = tau * tau, t3 = t2 * tau, t5 = t3 * t2, t7 = t5 * t2;

  // C: psi(k tau) = [psi(k tau) - log(k tau)] + log k + log tau, and the log k
  // sum and the log Gamma(m tau) term are combined analytically so that only
  // O(1) quantities are added.
  detail::CompensatedSum<Real> c;
  for (long k = 1; k < m; ++k) c += digamma_minus_log(Real(k) * tau);
  c += digamma_minus_log(w) / Real(2);
  c += -lt / Real(2) + (lm + lt) / (Real(2) * tau) + detail::half_log_two_pi<Real>;
  c += log_gamma_correction(Complex<Real>(Real(m))) - log_gamma_correction(w) / tau;
  const Complex<Real> c7 = t7 / Real(1209600) * polygamma(7, w);
  c += -tau / Real(12) * polygamma(1, w);
  c += t3 / Real(720) * polygamma(3, w);
  c += -t5 / Real(30240) * polygamma(5, w);
  c += c7;

  detail::CompensatedSum<Real> d;
  for (long k = 1; k < m; ++k) d += polygamma(1, Real(k) * tau);
  d += polygamma(1, w) / Real(2);
  d += -polygamma(0, w) / tau;
  const Complex<Real> d7 = t7 / Real(1209600) * polygamma(8, w);
  d += -tau / Real(12) * polygamma(2, w);
  d += t3 / Real(720) * polygamma(4, w);
  d += -t5 / Real(30240) * polygamma(6, w);
  d += d7;

  ModularForms<Real> f;
  f.tau = tau;
  f.C = c.value();
  f.D = d.value();
  f.m_used = m;
  f.error_estimate = std::max(std::abs(c7), std::abs(d7));
  complete_modular_forms(f);
  return f;
}

template <std::floating_point Real>
ModularForms<Real> modular_forms_em(Complex<Real> tau) {
  require_tau_off_cut(tau, "modular_forms_em");
  return modular_forms_em(tau, default_em_length(tau));
}

namespace detail {

inline constexpr int kIntegrandSeriesTerms = 24;

/// Q_n = (-1)^n q_n(-tau) for n < count.
template <std::floating_point Real>
std::vector<Complex<Real>> q_reflected_values(Complex<Real> tau, std::size_t count) {
  std::vector<Complex<Real>> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    const Complex<Real> v = q_poly(n).eval(-tau);
    out[n] = (n % 2 == 0) ? v : -v;
  }
  return out;
}

template <std::floating_point Real>
Real inverse_factorial(std::size_t n) {
  Real f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= Real(i);
  return Real(1) / f;
}

/// Below this x the modular-form integrands switch to their Taylor series.
template <std::floating_point Real>
Real integrand_series_cutoff(Complex<Real> tau) {
  return Real(0.125) / std::max(Real(1), std::abs(tau));
}

template <std::floating_point Real>
Complex<Real> horner_real(const std::vector<Complex<Real>>& c, Real x) {
  Complex<Real> acc{0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// 1 / (1 - e^{-w})
template <std::floating_point Real>
Complex<Real> inv_one_minus_exp(Complex<Real> w) {
  return Real(-1) / expm1(-w);
}

/// Integrand of the C integral together with its Taylor coefficients at 0.
template <std::floating_point Real>
class CIntegrand {
 public:
  explicit CIntegrand(Complex<Real> tau) : tau_(tau), cutoff_(integrand_series_cutoff(tau)) {
    const auto Q = q_reflected_values(tau, kIntegrandSeriesTerms + 2);
    const Complex<Real> lin = (Real(1) - tau / Real(2)) / tau;
    for (int p = 0; p < kIntegrandSeriesTerms; ++p) {
      const Real b = bernoulli_real<Real>(static_cast<std::size_t>(p + 2));
      const Real sign = (p % 2 == 0) ? Real(-1) : Real(1);  // (-1)^{p+1}
      coeffs_.push_back((Q[p + 2] - b) / tau * inverse_factorial<Real>(p + 2) -
                        lin * (sign * inverse_factorial<Real>(p + 1)));
    }
  }
  Complex<Real> direct(Real x) const {
    const Complex<Real> ex{std::exp(-x)};
    const Complex<Real> g = inv_one_minus_exp(Complex<Real>(x));
    const Complex<Real> first = std::exp(-tau_ * x) * g * inv_one_minus_exp(tau_ * x);
    const Complex<Real> second = ex / (tau_ * x) * (g + Real(1) - tau_ / Real(2));
    return first - second;
  }
  Complex<Real> series(Real x) const { return horner_real(coeffs_, x); }
  Complex<Real> operator()(Real x) const { return x < cutoff_ ? series(x) : direct(x); }

 private:
  Complex<Real> tau_;
  Real cutoff_;
  std::vector<Complex<Real>> coeffs_;
};

/// Integrand of the D integral together with its Taylor coefficients at 0.
template <std::floating_point Real>
class DIntegrand {
 public:
  explicit DIntegrand(Complex<Real> tau) : tau_(tau), cutoff_(integrand_series_cutoff(tau)) {
    const auto Q = q_reflected_values(tau, kIntegrandSeriesTerms + 1);
    for (int p = 0; p < kIntegrandSeriesTerms; ++p) {
      const Real sign = (p % 2 == 0) ? Real(-1) : Real(1);  // (-1)^{p+1}
      coeffs_.push_back((Q[p + 1] - sign) / tau * inverse_factorial<Real>(p + 1));
    }
  }
  Complex<Real> direct(Real x) const {
    const Complex<Real> first =
        x * std::exp(-tau_ * x) * inv_one_minus_exp(Complex<Real>(x)) * inv_one_minus_exp(tau_ * x);
    return first - std::exp(-x) / (tau_ * x);
  }
  Complex<Real> series(Real x) const { return horner_real(coeffs_, x); }
  Complex<Real> operator()(Real x) const { return x < cutoff_ ? series(x) : direct(x); }

 private:
  Complex<Real> tau_;
  Real cutoff_;
  std::vector<Complex<Real>> coeffs_;
};

template <std::floating_point Real>
void require_right_half_plane(Complex<Real> tau, const char* who) {
  if (!(tau.real() > 0)) {
    std::ostringstream os;
    os << who << ": requires Re tau > 0, got tau = " << tau;
    throw domain_error(os.str());
  }
}

}  // namespace detail

/// C(tau) = ln(2 pi)/(2 tau) - int_0^inf [e^{-tau x}/((1-e^{-x})(1-e^{-tau x}))
///          - e^{-x}/(tau x) (1/(1-e^{-x}) + 1 - tau/2)] dx,  Re tau > 0.
template <std::floating_point Real>
Complex<Real> C_via_integral(Complex<Real> tau, const QuadratureSpec& spec = {}) {
  detail::require_right_half_plane(tau, "C_via_integral");
  const detail::CIntegrand<Real> f(tau);
  constexpr Real two_pi = 2 * std::numbers::pi_v<Real>;
  return std::log(two_pi) / (Real(2) * tau) - integrate_semiaxis<Real>(f, spec);
}

/// D(tau) = int_0^inf [x e^{-tau x}/((1-e^{-x})(1-e^{-tau x})) - e^{-x}/(tau x)] dx,  Re tau > 0.
template <std::floating_point Real>
Complex<Real> D_via_integral(Complex<Real> tau, const QuadratureSpec& spec = {}) {
  detail::require_right_half_plane(tau, "D_via_integral");
  const detail::DIntegrand<Real> f(tau);
  return integrate_semiaxis<Real>(f, spec);
}

/// |D(tau) + D(-tau) - [pi^2/6 (1/tau^2 - 1) - pi i/tau + 2EK - (2/3) K^2 (1 + k'^2)]|
/// with tau = i K'/K.
template <std::floating_point Real>
Real d_reflection_residual(Real k) {
  const auto ke = elliptic_KE(k);
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Complex<Real> i{0, 1};
  const Complex<Real> tau = i * (ke.Kprime / ke.K);
  const Complex<Real> lhs = modular_forms_em(tau).D + modular_forms_em(Complex<Real>(-tau)).D;
  const Real kp2 = (1 - k) * (1 + k);
  const Complex<Real> rhs = pi * pi / Real(6) * (Real(1) / (tau * tau) - Real(1)) - pi * i / tau +
                            Real(2) * ke.E * ke.K - Real(2) / Real(3) * ke.K * ke.K * (1 + kp2);
  return std::abs(lhs - rhs);
}

}  // namespace barnes
