#pragma once

// Bernoulli numbers and polynomials, the Bernoulli-convolution polynomials
// q_n(tau) and the correction polynomials P_n(z; tau).  Every family has at
// least two independent exact constructions so they can check each other.

#include <complex>
#include <concepts>
#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "barnes/errors.hpp"
#include "barnes/polynomial.hpp"
#include "barnes/rational.hpp"

namespace barnes {

namespace detail {

/// Append-only memo table.  Readers share a lock; growth is serialized.
/// Entry i is produced by `make(i, entries[0..i))`.
template <typename T>
class MemoTable {
 public:
  using Generator = std::function<T(std::size_t, const std::vector<T>&)>;
  explicit MemoTable(Generator make) : make_(std::move(make)) {}

  T get(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < entries_.size()) return entries_[n];
    }
    std::unique_lock lock(mutex_);
    while (entries_.size() <= n) entries_.push_back(make_(entries_.size(), entries_));
    return entries_[n];
  }

 private:
  Generator make_;
  std::shared_mutex mutex_;
  std::vector<T> entries_;
};

inline Rational make_bernoulli(std::size_t n, const std::vector<Rational>& prev) {
  if (n == 0) return Rational(1);
  if (n >= 3 && n % 2 == 1) return Rational(0);
  // sum_{k=0}^{n} C(n+1, k) B_k = 0
  Rational s;
  for (std::size_t k = 0; k < n; ++k) {
    if (prev[k].is_zero()) continue;
    s += Rational(binomial(static_cast<std::int64_t>(n + 1), static_cast<std::int64_t>(k))) * prev[k];
  }
  return -s / Rational(static_cast<long>(n + 1));
}

inline MemoTable<Rational>& bernoulli_table() {
  static MemoTable<Rational> table(make_bernoulli);
  return table;
}

inline Rational brat(std::int64_t n, std::int64_t k) { return Rational(binomial(n, k)); }

/// (1+tau)^{k+2} - 1 - tau^{k+2}; its constant term is always zero.
inline RationalPolynomial binomial_gap(std::size_t k) {
  std::vector<Rational> c(k + 2);
  for (std::size_t j = 1; j <= k + 1; ++j)
    c[j] = brat(static_cast<std::int64_t>(k + 2), static_cast<std::int64_t>(j));
  return RationalPolynomial(std::move(c));
}

}  // namespace detail

/// B_n with B_1 = -1/2 (generating function u / (e^u - 1)).  Memoized.
inline Rational bernoulli_number(std::size_t n) { return detail::bernoulli_table().get(n); }

/// B_n(x) = sum_k C(n,k) B_{n-k} x^k
inline RationalPolynomial bernoulli_polynomial(std::size_t n) {
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    c[k] = detail::brat(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)) * bernoulli_number(n - k);
  return RationalPolynomial(std::move(c));
}

namespace detail {

inline RationalPolynomial make_q_direct(std::size_t n, const std::vector<RationalPolynomial>&) {
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational bk = bernoulli_number(k);
    if (bk.is_zero()) continue;
    c[k] = brat(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)) * bk * bernoulli_number(n - k);
  }
  return RationalPolynomial(std::move(c));
}

inline MemoTable<RationalPolynomial>& q_table() {
  static MemoTable<RationalPolynomial> table(make_q_direct);
  return table;
}

}  // namespace detail

/// q_n(tau) = sum_k C(n,k) B_k B_{n-k} tau^k, by direct convolution.  Memoized.
inline RationalPolynomial q_poly(std::size_t n) { return detail::q_table().get(n); }

/// q_n(tau) from the recursion driven by the series of (e^u-1)(e^{tau u}-1)/(tau u^2),
/// starting at q_0 = 1.  Shares nothing with q_poly beyond the integers.
inline RationalPolynomial q_poly_recursive(std::size_t n) {
  std::vector<RationalPolynomial> q{RationalPolynomial{Rational(1)}};
  for (std::size_t j = 1; j <= n; ++j) {
    RationalPolynomial s;
    for (std::size_t k = 1; k <= j; ++k) {
      const Rational w = detail::brat(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k)) /
                         Rational(static_cast<long>((k + 1) * (k + 2)));
      s += (detail::binomial_gap(k) * q[j - k]) * w;
    }
    q.push_back(-s.divided_by_x());
  }
  return q[n];
}

/// P_n(z; tau) = sum_{k=1}^n C(n+2, k+2) q_{n-k}(tau) z^{k-1}, n >= 1.
inline BivariatePolynomial p_poly(std::size_t n) {
  if (n == 0) throw domain_error("p_poly: n must be >= 1");
  std::vector<RationalPolynomial> c(n);
  for (std::size_t k = 1; k <= n; ++k)
    c[k - 1] = q_poly(n - k) * detail::brat(static_cast<std::int64_t>(n + 2), static_cast<std::int64_t>(k + 2));
  return BivariatePolynomial(std::move(c));
}

/// P_n by the recursion in n starting from P_1 = 1.
inline BivariatePolynomial p_poly_recursive(std::size_t n) {
  if (n == 0) throw domain_error("p_poly_recursive: n must be >= 1");
  std::vector<BivariatePolynomial> p(n + 1);
  p[1] = BivariatePolynomial::from_inner(RationalPolynomial{Rational(1)});
  for (std::size_t j = 2; j <= n; ++j) {
    BivariatePolynomial s;
    for (std::size_t k = 1; k < j; ++k) {
      const Rational w = detail::brat(static_cast<std::int64_t>(j + 2), static_cast<std::int64_t>(k + 2)) /
                         Rational(static_cast<long>((j - k + 1) * (j - k + 2)));
      s += (p[j - k] * detail::binomial_gap(k)) * w;
    }
    std::vector<RationalPolynomial> divided;
    for (const auto& c : s.coefficients()) divided.push_back(c.divided_by_x());
    p[j] = BivariatePolynomial::outer_monomial(RationalPolynomial{Rational(1)}, j - 1) -
           BivariatePolynomial(std::move(divided));
  }
  return p[n];
}

/// B~_k(z) = z^{-3} [B_k(z) - B_k(0) - B_k'(0) z - B_k''(0) z^2/2], k >= 3.
inline RationalPolynomial bernoulli_tail_polynomial(std::size_t k) {
  if (k < 3) throw domain_error("bernoulli_tail_polynomial: k must be >= 3");
  const RationalPolynomial b = bernoulli_polynomial(k);
  const auto& c = b.coefficients();
  return RationalPolynomial(std::vector<Rational>(c.begin() + 3, c.end()));
}

/// P_n via sum_k C(n+2,k+2) tau^{n-k} B_{n-k} B~_{k+2}(z).
inline BivariatePolynomial p_poly_alt(std::size_t n) {
  if (n == 0) throw domain_error("p_poly_alt: n must be >= 1");
  BivariatePolynomial acc;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational b = bernoulli_number(n - k);
    if (b.is_zero()) continue;
    const Rational w = detail::brat(static_cast<std::int64_t>(n + 2), static_cast<std::int64_t>(k + 2)) * b;
    const RationalPolynomial tau_pow = RationalPolynomial::monomial(w, n - k);
    const RationalPolynomial tail = bernoulli_tail_polynomial(k + 2);
    std::vector<RationalPolynomial> terms;
    for (const auto& t : tail.coefficients()) terms.push_back(tau_pow * t);
    acc += BivariatePolynomial(std::move(terms));
  }
  return acc;
}

template <std::floating_point Real>
std::complex<Real> eval_rational_poly(const RationalPolynomial& p, std::complex<Real> x) {
  return p.eval(x);
}

template <std::floating_point Real>
std::complex<Real> eval_bivariate(const BivariatePolynomial& p, std::complex<Real> z, std::complex<Real> tau) {
  return p.eval(z, tau);
}

}  // namespace barnes
