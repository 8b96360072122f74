#pragma once

// Convergence studies: product-length order of the engine and tail order of
// the large-z expansion.  Both run in long double so the orders are visible
// well above the rounding floor.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "barnes/asymptotics.hpp"
#include "barnes/double_gamma.hpp"

namespace barnes {

struct OrderRow {
  long N;
  int M;
  double error;
};

struct AsymptoticRow {
  double radius;
  int n_tail;
  double error;
};

struct TimingRow {
  long N;
  double seconds;
};

/// Least-squares slope of log y against log x over the points with y > floor.
/// Returns NaN when fewer than two points qualify.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y, double floor = 0) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(y[i] > floor)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// |log G_N,M(z) - log G_ref(z)| for each (M, N), reference N = 2^14, M = 12.
inline std::vector<OrderRow> order_n_study(Complex<double> z, Complex<double> tau, const std::vector<int>& Ms,
                                           const std::vector<long>& Ns) {
  using R = long double;
  const Complex<R> zl(z.real(), z.imag()), tl(tau.real(), tau.imag());
  ComputeParams ref;
  ref.auto_select = false;
  ref.N = 1L << 14;
  ref.M = 12;
  const Complex<R> exact = log_double_gamma<R>(zl, tl, ref).log_value;
  std::vector<OrderRow> rows;
  for (int M : Ms)
    for (long N : Ns) {
      ComputeParams p;
      p.auto_select = false;
      p.N = N;
      p.M = M;
      rows.push_back({N, M, static_cast<double>(std::abs(log_double_gamma<R>(zl, tl, p).log_value - exact))});
    }
  return rows;
}

/// Rounding floor for order fits of the long double engine near |log G| ~ scale.
inline double order_floor(double scale) {
  return 64 * static_cast<double>(std::numeric_limits<long double>::epsilon()) * (1 + scale);
}

/// |exp(engine - expansion) - 1| along the ray arg z = theta.
inline std::vector<AsymptoticRow> asymptotic_study(Complex<double> tau, double theta, const std::vector<double>& radii,
                                                   const std::vector<int>& n_tails) {
  using R = long double;
  const Complex<R> tl(tau.real(), tau.imag());
  int max_tail = 0;
  for (int n : n_tails) max_tail = std::max(max_tail, n);
  const AsymptoticCoeffs<R> full = asymptotic_coeffs<R>(tl, static_cast<std::size_t>(max_tail));
  std::vector<AsymptoticRow> rows;
  ComputeParams params;
  params.target = 1e-18;
  for (double r : radii) {
    const Complex<R> z = std::polar<R>(r, theta);
    const Complex<R> engine = log_double_gamma<R>(z, tl, params).log_value;
    for (int n : n_tails) {
      AsymptoticCoeffs<R> c = full;
      c.tail.resize(static_cast<std::size_t>(n) + 1);
      const Complex<R> d = engine - log_double_gamma_asymptotic(z, c, tl);
      const Complex<R> reduced(d.real(), std::remainder(d.imag(), 2 * std::numbers::pi_v<R>));
      rows.push_back({r, n, static_cast<double>(std::abs(detail::expm1(reduced)))});
    }
  }
  return rows;
}

/// Median wall-clock seconds per evaluation for each product length N (M = 12).
inline std::vector<TimingRow> timing_study(Complex<double> z, Complex<double> tau, const std::vector<long>& Ns,
                                           int repeats = 5) {
  std::vector<TimingRow> rows;
  (void)log_double_gamma(z, tau);  // warm caches
  for (long N : Ns) {
    ComputeParams p;
    p.auto_select = false;
    p.N = N;
    std::vector<double> t;
    for (int k = 0; k < repeats; ++k) {
      const auto t0 = std::chrono::steady_clock::now();
      (void)log_double_gamma(z, tau, p);
      t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    std::nth_element(t.begin(), t.begin() + repeats / 2, t.end());
    rows.push_back({N, t[repeats / 2]});
  }
  return rows;
}

}  // namespace barnes
