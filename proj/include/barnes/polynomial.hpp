#pragma once

// Dense polynomials with exact rational coefficients, in one variable and in
// two variables (outer variable over RationalPolynomial coefficients).

#include <algorithm>
#include <complex>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "barnes/errors.hpp"
#include "barnes/rational.hpp"

namespace barnes {

class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  RationalPolynomial(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
  explicit RationalPolynomial(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }

  static RationalPolynomial constant(Rational c) { return RationalPolynomial({std::move(c)}); }
  /// c * x^k
  static RationalPolynomial monomial(Rational c, std::size_t k) {
    std::vector<Rational> cs(k + 1);
    cs[k] = std::move(c);
    return RationalPolynomial(std::move(cs));
  }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<Rational>& coefficients() const { return c_; }

  /// Coefficient of x^k, zero beyond the stored range.
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }

  RationalPolynomial operator-() const {
    RationalPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  RationalPolynomial& operator+=(const RationalPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  RationalPolynomial& operator-=(const RationalPolynomial& o) { return *this += -o; }
  RationalPolynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPolynomial(std::move(r));
  }
  RationalPolynomial& operator*=(const RationalPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// p(x) * x^k
  RationalPolynomial shifted_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> r(k);
    r.insert(r.end(), c_.begin(), c_.end());
    return RationalPolynomial(std::move(r));
  }

  /// p(x) / x; throws if the constant term is nonzero.
  RationalPolynomial divided_by_x() const {
    if (is_zero()) return {};
    if (!c_.front().is_zero())
      throw consistency_error("RationalPolynomial: division by x leaves a remainder");
    return RationalPolynomial(std::vector<Rational>(c_.begin() + 1, c_.end()));
  }

  /// p(-x)
  RationalPolynomial reflected() const {
    RationalPolynomial r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  /// Coefficients in reverse order, padded to `length` first (x^{length-1} p(1/x)).
  RationalPolynomial reversed(std::size_t length) const {
    std::vector<Rational> r(std::max(length, c_.size()));
    std::copy(c_.begin(), c_.end(), r.begin());
    std::reverse(r.begin(), r.end());
    return RationalPolynomial(std::move(r));
  }

  /// d/dx
  RationalPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RationalPolynomial(std::move(r));
  }

  /// Horner evaluation; each coefficient is rounded to Real exactly once.
  template <std::floating_point Real>
  std::complex<Real> eval(std::complex<Real> x) const {
    std::complex<Real> acc{0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->template to<Real>();
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Polynomial in an outer variable (z for P_n, y for the two-variable
/// summation identities) whose coefficients are RationalPolynomials in tau.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<RationalPolynomial> cs) : c_(std::move(cs)) { trim(); }
  BivariatePolynomial(std::initializer_list<RationalPolynomial> cs) : c_(cs) { trim(); }

  static BivariatePolynomial from_inner(RationalPolynomial p) {
    return BivariatePolynomial(std::vector<RationalPolynomial>{std::move(p)});
  }
  /// p(tau) * z^k
  static BivariatePolynomial outer_monomial(RationalPolynomial p, std::size_t k) {
    std::vector<RationalPolynomial> cs(k + 1);
    cs[k] = std::move(p);
    return BivariatePolynomial(std::move(cs));
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RationalPolynomial>& coefficients() const { return c_; }
  RationalPolynomial operator[](std::size_t k) const { return k < c_.size() ? c_[k] : RationalPolynomial(); }

  BivariatePolynomial operator-() const {
    BivariatePolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  BivariatePolynomial& operator-=(const BivariatePolynomial& o) { return *this += -o; }

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const RationalPolynomial& p) {
    std::vector<RationalPolynomial> r;
    r.reserve(a.c_.size());
    for (const auto& c : a.c_) r.push_back(c * p);
    return BivariatePolynomial(std::move(r));
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RationalPolynomial> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return BivariatePolynomial(std::move(r));
  }

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  /// Horner in the outer variable of Horner-in-tau coefficient values.
  template <std::floating_point Real>
  std::complex<Real> eval(std::complex<Real> outer, std::complex<Real> inner) const {
    std::complex<Real> acc{0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * outer + it->eval(inner);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<RationalPolynomial> c_;
};

}  // namespace barnes
