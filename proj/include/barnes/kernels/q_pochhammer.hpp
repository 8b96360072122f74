#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <limits>

#include "barnes/errors.hpp"
#include "barnes/kernels/complex_util.hpp"

namespace barnes {

/// (a; q)_inf = prod_{n >= 0} (1 - a q^n) for |q| < 1.  The product stops once
/// |a q^n| drops below the unit roundoff.
template <std::floating_point Real>
Complex<Real> q_pochhammer(Complex<Real> a, Complex<Real> q) {
  if (!(std::abs(q) < 1)) throw domain_error("q_pochhammer: requires |q| < 1");
  const Real eps = std::numeric_limits<Real>::epsilon() / 2;
  Complex<Real> prod{1};
  Complex<Real> t = a;
  while (std::abs(t) >= eps) {
    prod *= Real(1) - t;
    t *= q;
  }
  return prod;
}

}  // namespace barnes
