#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>

namespace barnes {

template <std::floating_point Real>
using Complex = std::complex<Real>;

namespace detail {

/// e^w - 1 without cancellation for small |w|.
template <std::floating_point Real>
Complex<Real> expm1(Complex<Real> w) {
  const Real a = w.real();
  const Real b = w.imag();
  const Real s = std::sin(b / 2);
  return {std::expm1(a) * std::cos(b) - 2 * s * s, std::exp(a) * std::sin(b)};
}

/// log(1 + t), principal branch, accurate for small |t|.
template <std::floating_point Real>
Complex<Real> log1p(Complex<Real> t) {
  const Real a = t.real();
  const Real b = t.imag();
  return {std::log1p(2 * a + a * a + b * b) / 2, std::atan2(b, 1 + a)};
}

/// Distance from w to the cut (-inf, 0].
template <std::floating_point Real>
Real distance_to_cut(Complex<Real> w) {
  return w.real() >= 0 ? std::abs(w) : std::abs(w.imag());
}

template <std::floating_point Real>
bool is_nonpositive_integer(Complex<Real> z) {
  return z.imag() == 0 && z.real() <= 0 && z.real() == std::nearbyint(z.real());
}

/// Neumaier-compensated complex accumulator.
template <std::floating_point Real>
class CompensatedSum {
 public:
  void add(Complex<Real> v) {
    add_part(re_, cre_, v.real());
    add_part(im_, cim_, v.imag());
  }
  CompensatedSum& operator+=(Complex<Real> v) {
    add(v);
    return *this;
  }
  Complex<Real> value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add_part(Real& s, Real& c, Real x) {
    const Real t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  Real re_ = 0, cre_ = 0, im_ = 0, cim_ = 0;
};

template <std::floating_point Real>
constexpr Real half_log_two_pi = Real(0.91893853320467274178032973640561763986139747363778L);

}  // namespace detail
}  // namespace barnes
