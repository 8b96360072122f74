#pragma once

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>

#include "barnes/errors.hpp"

namespace barnes {

template <std::floating_point Real>
struct EllipticKE {
  Real K;
  Real E;
  Real Kprime;
};

namespace detail {

/// K(k) and E(k) from the arithmetic-geometric mean of 1 and k' = sqrt(1 - k^2).
template <std::floating_point Real>
void agm_KE(Real k, Real kp, Real& K, Real& E) {
  Real a = 1, b = kp;
  Real c = k;
  Real sum = c * c / 2;  // sum_n 2^{n-1} c_n^2
  Real pow2 = 1;
  for (int it = 0; it < 64; ++it) {
    const Real an = (a + b) / 2;
    const Real bn = std::sqrt(a * b);
    c = (a - b) / 2;
    sum += pow2 * c * c;
    pow2 *= 2;
    a = an;
    b = bn;
    if (std::abs(c) <= std::numeric_limits<Real>::epsilon() * a) break;
  }
  K = std::numbers::pi_v<Real> / (2 * a);
  E = K * (1 - sum);
}

}  // namespace detail

/// Complete elliptic integrals K(k), E(k) and K'(k) = K(sqrt(1 - k^2)).
template <std::floating_point Real>
EllipticKE<Real> elliptic_KE(Real k) {
  if (!(k > 0 && k < 1)) throw domain_error("elliptic_KE: modulus must lie in (0, 1)");
  const Real kp = std::sqrt((1 - k) * (1 + k));
  EllipticKE<Real> r{};
  Real Ep;
  detail::agm_KE(k, kp, r.K, r.E);
  detail::agm_KE(kp, k, r.Kprime, Ep);
  return r;
}

}  // namespace barnes
