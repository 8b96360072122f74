#pragma once

// log G(z; tau) = int_0^inf ( (e^{-tau x} - e^{-z x}) / ((1 - e^{-x})(1 - e^{-tau x}))
//                 - z e^{-tau x}/(1 - e^{-tau x}) + (z - 1)(z/(2 tau) - 1) e^{-tau x}
//                 + e^{-x}/(1 - e^{-x}) ) dx / x,      Re z > 0, Re tau > 0.
// Used as an independent check of the product engine.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <sstream>
#include <vector>

#include "barnes/errors.hpp"
#include "barnes/kernels/quadrature.hpp"
#include "barnes/modular_forms.hpp"

namespace barnes {

namespace detail {

/// Integrand of the log G representation with its Taylor expansion at 0.  With
/// Q_n = (-1)^n q_n(-tau) and A_n = sum_k C(n,k) (tau - z)^{n-k} Q_k, the x^p
/// coefficient is
///   (Q_{p+3} - A_{p+3})/(tau (p+3)!) - z B_{p+2} tau^{p+1}/(p+2)!
///   + kappa (-tau)^{p+1}/(p+1)! + B_{p+2}/(p+2)!,   kappa = (z-1)(z/(2 tau) - 1).
template <std::floating_point Real>
class LogGIntegrand {
 public:
  LogGIntegrand(Complex<Real> z, Complex<Real> tau)
      : z_(z), tau_(tau), kappa_((z - Real(1)) * (z / (Real(2) * tau) - Real(1))) {
    cutoff_ = Real(0.125) / std::max({Real(1), std::abs(tau), std::abs(z) / 4});
    const int P = kIntegrandSeriesTerms;
    const auto Q = q_reflected_values(tau, P + 3);
    const Complex<Real> s = tau - z;
    for (int p = 0; p < P; ++p) {
      const int n = p + 3;
      Complex<Real> a{0};
      Complex<Real> spow{1};
      for (int k = n; k >= 0; --k) {  // sum_k C(n,k) s^{n-k} Q_k
        a += Real(binomial(n, k).template convert_to<long double>()) * spow * Q[k];
        spow *= s;
      }
      const Real b = bernoulli_real<Real>(static_cast<std::size_t>(p + 2));
      const Complex<Real> tp1 = std::pow(tau, p + 1);
      const Real sign = (p % 2 == 0) ? Real(-1) : Real(1);  // (-1)^{p+1}
      coeffs_.push_back((Q[n] - a) / tau * inverse_factorial<Real>(n) -
                        z * b * tp1 * inverse_factorial<Real>(p + 2) +
                        kappa_ * sign * tp1 * inverse_factorial<Real>(p + 1) + b * inverse_factorial<Real>(p + 2));
    }
  }

  Complex<Real> direct(Real x) const {
    const Complex<Real> g1 = inv_one_minus_exp(Complex<Real>(x));
    const Complex<Real> gt = inv_one_minus_exp(tau_ * x);
    const Complex<Real> et = std::exp(-tau_ * x);
    const Complex<Real> ez = std::exp(-z_ * x);
    const Complex<Real> bracket = (et - ez) * g1 * gt - z_ * et * gt + kappa_ * et + std::exp(-x) * g1;
    return bracket / x;
  }
  Complex<Real> series(Real x) const { return horner_real(coeffs_, x); }
  Complex<Real> operator()(Real x) const { return x < cutoff_ ? series(x) : direct(x); }

 private:
  Complex<Real> z_, tau_, kappa_;
  Real cutoff_;
  std::vector<Complex<Real>> coeffs_;
};

}  // namespace detail

/// A real-analytic branch of log G(z; tau) for Re z > 0, Re tau > 0; agrees
/// with the canonical engine log modulo 2 pi i.
template <std::floating_point Real>
Complex<Real> log_G_via_integral(Complex<Real> z, Complex<Real> tau, const QuadratureSpec& spec = {}) {
  if (!(z.real() > 0) || !(tau.real() > 0)) {
    std::ostringstream os;
    os << "log_G_via_integral: requires Re z > 0 and Re tau > 0, got z = " << z << ", tau = " << tau;
    throw domain_error(os.str());
  }
  const detail::LogGIntegrand<Real> f(z, tau);
  return integrate_semiaxis<Real>(f, spec);
}

}  // namespace barnes
