#pragma once

// Exact polynomial identities satisfied by q_n and P_n.  Each check builds
// both sides in rational arithmetic and compares them structurally.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "barnes/poly_core.hpp"

namespace barnes::poly_checks {

namespace detail {

inline Rational binom(std::size_t n, std::size_t k) {
  return Rational(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
}

/// B_{k}(y) - B_k as a polynomial in the outer variable y with constant inner coefficients.
inline BivariatePolynomial bernoulli_shifted_in_outer(std::size_t k) {
  const RationalPolynomial b = bernoulli_polynomial(k);
  const auto& c = b.coefficients();
  std::vector<RationalPolynomial> out(c.size());
  for (std::size_t j = 1; j < c.size(); ++j) out[j] = RationalPolynomial::constant(c[j]);
  return BivariatePolynomial(std::move(out));
}

/// p(tau * y) (or y^n p(tau / y) when `inverse`), as a polynomial in y over tau.
inline BivariatePolynomial scaled_in_outer(const RationalPolynomial& p, std::size_t n, bool inverse) {
  BivariatePolynomial out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].is_zero()) continue;
    out += BivariatePolynomial::outer_monomial(RationalPolynomial::monomial(p[j], j), inverse ? n - j : j);
  }
  return out;
}

}  // namespace detail

/// q_n == q_n by the recursion.
inline bool q_routes_agree(std::size_t n) { return q_poly(n) == q_poly_recursive(n); }

/// P_n from the definition, the recursion and the B~ form all coincide.
inline bool p_routes_agree(std::size_t n) {
  const auto p = p_poly(n);
  return p == p_poly_recursive(n) && p == p_poly_alt(n);
}

/// q_n(tau) = tau^n q_n(1/tau): the coefficient sequence is a palindrome of length n+1.
inline bool q_palindromic(std::size_t n) {
  const auto q = q_poly(n);
  return q.reversed(n + 1) == q;
}

/// q_{2m+1}(tau) = -(m + 1/2) B_{2m} tau (1 + tau^{2m-1}), m >= 1.
inline bool q_odd_closed_form(std::size_t m) {
  const Rational c = -(Rational(static_cast<long>(2 * m + 1), 2) * bernoulli_number(2 * m));
  const RationalPolynomial expected = RationalPolynomial::monomial(c, 1) + RationalPolynomial::monomial(c, 2 * m);
  return q_poly(2 * m + 1) == expected;
}

/// sum_k C(n,k) q_k(tau) = (-1)^n q_n(-tau)
inline bool sum_identity1(std::size_t n) {
  RationalPolynomial lhs;
  for (std::size_t k = 0; k <= n; ++k) lhs += q_poly(k) * detail::binom(n, k);
  RationalPolynomial rhs = q_poly(n).reflected();
  if (n % 2 == 1) rhs = -rhs;
  return lhs == rhs;
}

/// sum_k C(n+1,k) q_k(tau) = (n+1) B_n tau^n
inline bool sum_identity2(std::size_t n) {
  RationalPolynomial lhs;
  for (std::size_t k = 0; k <= n; ++k) lhs += q_poly(k) * detail::binom(n + 1, k);
  const Rational c = Rational(static_cast<long>(n + 1)) * bernoulli_number(n);
  return lhs == RationalPolynomial::monomial(c, n);
}

/// sum_k C(n+1,k+1) (B_{k+1}(y) - B_{k+1}) y^{n-k} q_{n-k}(tau) = (n+1) y q_n(tau y)
inline bool sum_identity3(std::size_t n) {
  BivariatePolynomial lhs;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto q = BivariatePolynomial::outer_monomial(q_poly(n - k), n - k);
    lhs += (detail::bernoulli_shifted_in_outer(k + 1) * q) * detail::binom(n + 1, k + 1);
  }
  const auto y = BivariatePolynomial::outer_monomial(RationalPolynomial::constant(Rational(1)), 1);
  const auto rhs = (y * detail::scaled_in_outer(q_poly(n), n, false)) * Rational(static_cast<long>(n + 1));
  return lhs == rhs;
}

/// sum_k C(n+1,k+1) (B_{k+1}(y) - B_{k+1}) (tau/y)^k q_{n-k}(tau) = (n+1) y q_n(tau/y),
/// compared after multiplying both sides by y^n.
inline bool sum_identity4(std::size_t n) {
  BivariatePolynomial lhs;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto q =
        BivariatePolynomial::outer_monomial(q_poly(n - k) * RationalPolynomial::monomial(Rational(1), k), n - k);
    lhs += (detail::bernoulli_shifted_in_outer(k + 1) * q) * detail::binom(n + 1, k + 1);
  }
  const auto y = BivariatePolynomial::outer_monomial(RationalPolynomial::constant(Rational(1)), 1);
  const auto rhs = (y * detail::scaled_in_outer(q_poly(n), n, true)) * Rational(static_cast<long>(n + 1));
  return lhs == rhs;
}

/// (sum_{n<=deg} q_n u^n/n!) * (sum_{n<=deg} [(1+tau)^{n+2}-1-tau^{n+2}] / (tau (n+2)!) u^n)
/// equals 1 + O(u^{deg+1}).
inline bool generating_function_check(std::size_t deg) {
  std::vector<RationalPolynomial> a(deg + 1), b(deg + 1);
  BigInt fact = 1;  // n!
  for (std::size_t n = 0; n <= deg; ++n) {
    if (n > 0) fact *= n;
    a[n] = q_poly(n) * Rational(BigInt(1), fact);
    const BigInt fact2 = fact * (n + 1) * (n + 2);
    b[n] = barnes::detail::binomial_gap(n).divided_by_x() * Rational(BigInt(1), fact2);
  }
  for (std::size_t n = 0; n <= deg; ++n) {
    RationalPolynomial c;
    for (std::size_t k = 0; k <= n; ++k) c += a[k] * b[n - k];
    if (c != (n == 0 ? RationalPolynomial{Rational(1)} : RationalPolynomial{})) return false;
  }
  return true;
}

/// P_n(z/tau; 1/tau) = tau^{1-n} P_n(z; tau): after multiplying by tau^{n-1}, the
/// z^j coefficient c_j(tau) must equal tau^{n-1-j} c_j(1/tau).
inline bool p_scaling(std::size_t n) {
  const auto p = p_poly(n);
  for (std::size_t j = 0; j < p.coefficients().size(); ++j) {
    const auto& c = p.coefficients()[j];
    if (c.degree() > static_cast<long>(n - 1 - j)) return false;
    if (c.reversed(n - j) != c) return false;
  }
  return true;
}

/// P_n has degree n-1 in z with leading coefficient 1.
inline bool p_monic(std::size_t n) {
  const auto p = p_poly(n);
  return p.degree() == static_cast<long>(n - 1) && p[n - 1] == RationalPolynomial{Rational(1)};
}

}  // namespace barnes::poly_checks
