#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <sstream>

#include "barnes/errors.hpp"
#include "barnes/kernels/complex_util.hpp"
#include "barnes/kernels/log_gamma.hpp"

namespace barnes {

inline constexpr int kMaxPolygammaOrder = 12;

namespace detail {

inline constexpr int kPolygammaBernoulliTerms = 12;

template <std::floating_point Real>
Real polygamma_threshold(int k) {
  return Real(8 + 2 * k);
}

/// psi(w) - log(w) ~ -1/(2w) - sum_j B_2j / (2j w^2j)
template <std::floating_point Real>
Complex<Real> digamma_asymptotic_tail(Complex<Real> w) {
  const Complex<Real> inv = Real(1) / w;
  const Complex<Real> inv2 = inv * inv;
  Complex<Real> s = -inv / Real(2);
  Complex<Real> pw = inv2;
  for (int j = 1; j <= kPolygammaBernoulliTerms; ++j) {
    s -= pw * (bernoulli_real<Real>(2 * j) / Real(2 * j));
    pw *= inv2;
  }
  return s;
}

/// Large-|w| expansion of psi^(k)(w), truncated after B_24.
template <std::floating_point Real>
Complex<Real> polygamma_asymptotic(int k, Complex<Real> w) {
  const Complex<Real> inv = Real(1) / w;
  const Complex<Real> inv2 = inv * inv;
  if (k == 0) return std::log(w) + digamma_asymptotic_tail(w);
  Real fact_km1 = 1;  // (k-1)!
  for (int i = 2; i < k; ++i) fact_km1 *= Real(i);
  const Real fact_k = fact_km1 * Real(k);
  Complex<Real> wk = std::pow(inv, k);
  Complex<Real> s = wk * fact_km1 + wk * inv * (fact_k / 2);
  Complex<Real> pw = wk * inv2;
  for (int j = 1; j <= kPolygammaBernoulliTerms; ++j) {
    Real ratio = 1;  // (2j+k-1)! / (2j)!
    for (int i = 2 * j + 1; i <= 2 * j + k - 1; ++i) ratio *= Real(i);
    s += pw * (bernoulli_real<Real>(2 * j) * ratio);
    pw *= inv2;
  }
  return (k % 2 == 1) ? s : -s;
}

}  // namespace detail

/// psi^(k)(z) for 0 <= k <= 12 (k = 0 is the digamma function).  Upward
/// recurrence until |z| >= 8 + 2k and |arg z| <= 2 pi / 3, then the
/// Bernoulli asymptotic series.
template <std::floating_point Real>
Complex<Real> polygamma(int k, Complex<Real> z) {
  if (k < 0 || k > kMaxPolygammaOrder) throw domain_error("polygamma: order must be in 0..12");
  if (detail::is_nonpositive_integer(z)) {
    std::ostringstream os;
    os << "polygamma: pole at z = " << z.real();
    throw pole_error(os.str());
  }
  const Real thr = detail::polygamma_threshold<Real>(k);
  Complex<Real> w = z;
  detail::CompensatedSum<Real> shifted;
  while (!detail::in_stirling_region(w, thr)) {
    shifted += std::pow(Real(1) / w, k + 1);
    w += Real(1);
  }
  Real fact_k = 1;
  for (int i = 2; i <= k; ++i) fact_k *= Real(i);
  const Real sign = (k % 2 == 0) ? Real(1) : Real(-1);
  return detail::polygamma_asymptotic(k, w) - shifted.value() * (sign * fact_k);
}

template <std::floating_point Real>
Complex<Real> digamma(Complex<Real> z) {
  return polygamma(0, z);
}

/// psi(w) - log(w), free of the cancellation between the two for large |w|.
template <std::floating_point Real>
Complex<Real> digamma_minus_log(Complex<Real> w) {
  if (detail::in_stirling_region(w, detail::polygamma_threshold<Real>(0)))
    return detail::digamma_asymptotic_tail(w);
  return polygamma(0, w) - std::log(w);
}

}  // namespace barnes
