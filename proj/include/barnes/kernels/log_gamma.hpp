#pragma once

// Complex log-gamma on its standard branch: real on (0, inf) and analytic in
// C \ (-inf, 0].  Points on the cut take the limit from the side given by the
// sign of the imaginary zero, like std::log.
//
// Two independent evaluations are provided:
//   log_gamma          Stirling series after an upward shift, reflection for Re z < 0
//   log_gamma_lanczos  Lanczos (g = 7, n = 9), double precision only
// The second one exists so the first can be cross-checked.

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <sstream>

#include "barnes/errors.hpp"
#include "barnes/kernels/complex_util.hpp"
#include "barnes/poly_core.hpp"

namespace barnes {

namespace detail {

inline constexpr std::size_t kMaxRealBernoulli = 64;

/// B_n rounded to Real, n <= kMaxRealBernoulli.
template <std::floating_point Real>
Real bernoulli_real(std::size_t n) {
  static const auto table = [] {
    std::array<Real, kMaxRealBernoulli + 1> t{};
    for (std::size_t i = 0; i <= kMaxRealBernoulli; ++i) t[i] = bernoulli_number(i).template to<Real>();
    return t;
  }();
  return table[n];
}

inline constexpr int kStirlingTerms = 14;

template <std::floating_point Real>
constexpr Real stirling_radius = Real(15);

/// True where the Stirling series is used without further shifting.
template <std::floating_point Real>
bool in_stirling_region(Complex<Real> w, Real radius) {
  return std::abs(w) >= radius && std::abs(std::arg(w)) <= 2 * std::numbers::pi_v<Real> / 3;
}

/// sum_k B_2k / (2k (2k-1)) w^{1-2k}
template <std::floating_point Real>
Complex<Real> stirling_series(Complex<Real> w) {
  const Complex<Real> inv = Real(1) / w;
  const Complex<Real> inv2 = inv * inv;
  Complex<Real> pw = inv;
  Complex<Real> s{0};
  for (int k = 1; k <= kStirlingTerms; ++k) {
    const Complex<Real> term = pw * (bernoulli_real<Real>(2 * k) / Real(2 * k * (2 * k - 1)));
    s += term;
    if (std::abs(term) <= std::numeric_limits<Real>::epsilon() * Real(1e-3) * std::abs(s)) break;
    pw *= inv2;
  }
  return s;
}

template <std::floating_point Real>
Complex<Real> stirling_main(Complex<Real> w) {
  return (w - Real(0.5)) * std::log(w) - w + half_log_two_pi<Real>;
}

template <std::floating_point Real>
Complex<Real> log_gamma_right(Complex<Real> z) {
  // Re z >= 0 here; each log(z + j) is analytic off the cut, so the sum keeps the standard branch.
  Complex<Real> w = z;
  CompensatedSum<Real> logs;
  while (std::abs(w) < stirling_radius<Real>) {
    logs += std::log(w);
    w += Real(1);
  }
  return stirling_main(w) + stirling_series(w) - logs.value();
}

}  // namespace detail

/// Standard-branch log Gamma(z).  Throws pole_error at 0, -1, -2, ...
template <std::floating_point Real>
Complex<Real> log_gamma(Complex<Real> z) {
  if (detail::is_nonpositive_integer(z)) {
    std::ostringstream os;
    os << "log_gamma: pole at z = " << z.real();
    throw pole_error(os.str());
  }
  if (!(z.real() < 0)) return detail::log_gamma_right(z);

  // lnG(z) = ln(2 pi) - i pi/2 + i pi z - log(1 - e^{2 pi i z}) - lnG(1 - z) in the upper
  // half-plane (the constant is fixed by z = 1/2); conjugate symmetry gives the lower one.
  const bool lower = std::signbit(z.imag());
  const Complex<Real> zu = lower ? std::conj(z) : z;
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Complex<Real> i{0, 1};
  const Complex<Real> e = std::exp(Real(2) * pi * i * zu);
  const Complex<Real> r = std::log(Real(2) * pi) - i * (pi / 2) + i * pi * zu - detail::log1p(-e) -
                          detail::log_gamma_right(Real(1) - zu);
  return lower ? std::conj(r) : r;
}

template <std::floating_point Real>
Real log_gamma(Real x) {
  return log_gamma(Complex<Real>(x)).real();
}

/// lnG(w) - [(w - 1/2) log w - w + ln(2 pi)/2]: the Stirling remainder, computed
/// without forming the large leading terms when |w| is large.
template <std::floating_point Real>
Complex<Real> log_gamma_correction(Complex<Real> w) {
  if (detail::in_stirling_region(w, detail::stirling_radius<Real>)) return detail::stirling_series(w);
  return log_gamma(w) - detail::stirling_main(w);
}

/// Lanczos approximation, g = 7 with 9 coefficients (about 15 digits).
inline Complex<double> log_gamma_lanczos(Complex<double> z) {
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  if (detail::is_nonpositive_integer(z)) throw pole_error("log_gamma_lanczos: pole");
  if (z.real() < 0.5) {
    const bool lower = std::signbit(z.imag());
    const Complex<double> zu = lower ? std::conj(z) : z;
    constexpr double pi = std::numbers::pi;
    const Complex<double> i{0, 1};
    const Complex<double> e = std::exp(2.0 * pi * i * zu);
    const Complex<double> r =
        std::log(2.0 * pi) - i * (pi / 2) + i * pi * zu - detail::log1p(-e) - log_gamma_lanczos(1.0 - zu);
    return lower ? std::conj(r) : r;
  }
  const Complex<double> zm = z - 1.0;
  Complex<double> x = p[0];
  for (std::size_t k = 1; k < p.size(); ++k) x += p[k] / (zm + static_cast<double>(k));
  const Complex<double> t = zm + g + 0.5;
  return detail::half_log_two_pi<double> + (zm + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace barnes
