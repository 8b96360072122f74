#pragma once

// Evaluation engine for log G(z; tau): the truncated Gamma product with N
// factors plus the N^{-k} correction series of order M.
//
// The returned logarithm is the canonical one: the term-by-term sum
//   -log tau - lnGamma(z) + a~ z/tau + b~ z^2/(2 tau^2)
//   + sum_{m=1}^{N} [lnGamma(m tau) - lnGamma(z + m tau) + z psi(m tau) + z^2/2 psi'(m tau)] + R
// with standard-branch lnGamma and principal log tau.  It is not reduced
// modulo 2 pi i.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "barnes/errors.hpp"
#include "barnes/kernels/complex_util.hpp"
#include "barnes/kernels/log_gamma.hpp"
#include "barnes/kernels/polygamma.hpp"
#include "barnes/modular_forms.hpp"
#include "barnes/poly_core.hpp"

namespace barnes {

inline constexpr int kMaxCorrectionOrder = 16;
inline constexpr long kMaxProductLength = 1'000'000;

struct ComputeParams {
  long N = 0;          // product truncation
  int M = 12;          // correction order, 1..16
  long m_cd = 0;       // Euler-Maclaurin length for C, D; 0 selects the default
  bool auto_select = true;
  double target = 1e-13;  // used when auto_select is set
};

template <std::floating_point Real>
struct EvalResult {
  Complex<Real> log_value;
  Complex<Real> value;
  Real error_estimate = 0;
  ComputeParams params_used;
  std::vector<std::string> warnings;
};

inline const char* const kWarnPrecision = "precision-exhausted";
inline const char* const kWarnDisk = "disk-condition-violated";

namespace detail {

/// P_k(z; tau) coefficients rounded to Real: table[k][j][i] is the tau^i z^j coefficient.
template <std::floating_point Real>
const std::vector<std::vector<std::vector<Real>>>& p_poly_table() {
  static const auto table = [] {
    std::vector<std::vector<std::vector<Real>>> t(kMaxCorrectionOrder + 1);
    for (std::size_t k = 1; k <= kMaxCorrectionOrder; ++k) {
      const BivariatePolynomial p = p_poly(k);
      for (const auto& c : p.coefficients()) {
        std::vector<Real> row;
        for (const auto& r : c.coefficients()) row.push_back(r.template to<Real>());
        t[k].push_back(std::move(row));
      }
    }
    return t;
  }();
  return table;
}

template <std::floating_point Real>
Complex<Real> eval_p_table(std::size_t k, Complex<Real> z, Complex<Real> tau) {
  const auto& rows = p_poly_table<Real>()[k];
  Complex<Real> acc{0};
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    Complex<Real> c{0};
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) c = c * tau + *jt;
    acc = acc * z + c;
  }
  return acc;
}

/// The k-th correction term z^3 (-tau)^{-k-1} P_k(z; -tau) / (k(k+1)(k+2)) N^{-k}.
template <std::floating_point Real>
Complex<Real> correction_term(std::size_t k, Complex<Real> z, Complex<Real> tau, long N) {
  const Complex<Real> mt = -tau;
  const Real denom = Real(k * (k + 1) * (k + 2)) * std::pow(Real(N), Real(k));
  return z * z * z * std::pow(mt, -static_cast<int>(k) - 1) * eval_p_table<Real>(k, z, mt) / denom;
}

/// Truncation heuristic: |last correction term| * N / (|N tau / z| - 1).
template <std::floating_point Real>
Real truncation_estimate(Complex<Real> z, Complex<Real> tau, long N, int M) {
  const Real last = std::abs(correction_term<Real>(static_cast<std::size_t>(M), z, tau, N));
  if (std::abs(z) == 0) return last;
  const Real ratio = std::abs(Real(N) * tau / z);
  if (ratio <= 1) return std::numeric_limits<Real>::infinity();
  return last * Real(N) / (ratio - 1);
}

/// dist(N tau, (-inf, 0]) > 2|z|: the Taylor disks used for the tail stay off the cut.
template <std::floating_point Real>
bool disk_condition(Complex<Real> z, Complex<Real> tau, long N) {
  return distance_to_cut(Complex<Real>(Real(N) * tau)) > 2 * std::abs(z);
}

/// (log1p(t) - t + t^2/2) / t^3 for |t| <= 1/4.
template <std::floating_point Real>
Complex<Real> log1p_cubic_remainder(Complex<Real> t) {
  const Real eps = std::numeric_limits<Real>::epsilon() / 4;
  Complex<Real> s{0};
  Complex<Real> pw{1};
  for (int n = 3; n < 200; ++n) {
    const Complex<Real> term = pw / Real(n);
    s += (n % 2 == 1) ? term : -term;
    if (std::abs(term) < eps * std::abs(s)) break;
    pw *= t;
  }
  return s;
}

inline constexpr int kRmBernoulliTerms = 12;

/// True where r_m is evaluated by the cancellation-free expansion.
template <std::floating_point Real>
bool rm_series_applies(Complex<Real> z, Complex<Real> w) {
  return std::abs(w) >= Real(20) && std::abs(z) <= std::abs(w) / 4 &&
         std::abs(std::arg(w)) <= 2 * std::numbers::pi_v<Real> / 3;
}

/// r_m = lnGamma(w) - lnGamma(w + z) + z psi(w) + z^2/2 psi'(w), w = m tau.
/// For |z/w| <= 1/4 and large |w| the leading Stirling terms are cancelled
/// analytically (t = z/w, chi = (log1p(t) - t + t^2/2)/t^3):
///   r = z t^2 (1/2 - chi) - (z - 1/2) t^3 chi
///     + sum_k B_2k w^{1-2k} [(1 - (1+t)^{1-2k})/(2k(2k-1)) - t/(2k) + t^2/2].
/// The disk |s - w| <= |w|/4 stays off the cut, so this is the same branch as
/// the direct standard-branch difference.
template <std::floating_point Real>
Complex<Real> r_term(Complex<Real> z, Complex<Real> w) {
  if (!rm_series_applies(z, w)) {
    return log_gamma(w) - log_gamma(Complex<Real>(w + z)) + z * polygamma(0, w) +
           z * z / Real(2) * polygamma(1, w);
  }
  const Complex<Real> t = z / w;
  const Complex<Real> chi = log1p_cubic_remainder(t);
  const Complex<Real> t2 = t * t;
  Complex<Real> r = z * t2 * (Real(0.5) - chi) - (z - Real(0.5)) * t2 * t * chi;
  const Complex<Real> inv_w2 = Real(1) / (w * w);
  const Complex<Real> inv_1pt2 = Real(1) / ((Real(1) + t) * (Real(1) + t));
  Complex<Real> wpow = Real(1) / w;              // w^{1-2k}
  Complex<Real> tpow = Real(1) / (Real(1) + t);  // (1+t)^{1-2k}
  const Real eps = std::numeric_limits<Real>::epsilon() / 8;
  for (int k = 1; k <= kRmBernoulliTerms; ++k) {
    const Real b = bernoulli_real<Real>(static_cast<std::size_t>(2 * k));
    // 1 - (1+t)^{1-2k} computed as -expm1((1-2k) log1p(t)) to keep the O(t) size exact
    const Complex<Real> one_minus = -expm1(Real(1 - 2 * k) * log1p(t));
    const Complex<Real> bracket =
        one_minus / Real(2 * k * (2 * k - 1)) - t / Real(2 * k) + t2 / Real(2);
    const Complex<Real> term = b * wpow * bracket;
    r += term;
    if (std::abs(term) <= eps * std::abs(r)) break;
    wpow *= inv_w2;
    tpow *= inv_1pt2;
  }
  return r;
}

/// Shared cache of C, D for repeated evaluations at the same tau.
template <std::floating_point Real>
ModularForms<Real> cached_modular_forms(Complex<Real> tau, long m) {
  using Key = std::tuple<Real, Real, long>;
  static std::mutex mutex;
  static std::map<Key, ModularForms<Real>> cache;
  const Key key{tau.real(), tau.imag(), m};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ModularForms<Real> f = modular_forms_em(tau, m);
  std::lock_guard lock(mutex);
  if (cache.size() > 4096) cache.clear();
  cache.emplace(key, f);
  return f;
}

}  // namespace detail

/// If z lies within 1e-12 (1 + |z|) of a zero -m tau - n (m, n >= 0), returns (m, n).
template <std::floating_point Real>
std::optional<std::pair<long, long>> find_lattice_zero(Complex<Real> z, Complex<Real> tau) {
  const Real tol = Real(1e-12) * (1 + std::abs(z));
  auto test = [&](long m) -> std::optional<std::pair<long, long>> {
    if (m < 0) return std::nullopt;
    const Complex<Real> y = z + Real(m) * tau;
    const Real n = std::nearbyint(y.real());
    if (n <= 0 && std::abs(y - Complex<Real>(n)) <= tol) return std::pair<long, long>{m, static_cast<long>(-n)};
    return std::nullopt;
  };
  if (std::abs(tau.imag()) > tol) {
    const Real mc = -z.imag() / tau.imag();
    if (!(mc > -1) || mc > Real(1e15)) return std::nullopt;
    const long m0 = static_cast<long>(std::floor(mc));
    for (long m = m0 - 1; m <= m0 + 2; ++m)
      if (auto r = test(m)) return r;
    return std::nullopt;
  }
  if (std::abs(z.imag()) > tol + std::abs(tau.imag()) * Real(1e15)) return std::nullopt;
  const Real mmax = std::floor(-z.real() / tau.real()) + 1;
  if (mmax > Real(1e9)) throw capacity_error("find_lattice_zero: argument too far along the zero ray");
  for (long m = 0; m <= static_cast<long>(mmax); ++m)
    if (auto r = test(m)) return r;
  return std::nullopt;
}

/// N, M and m_cd for a target truncation error: M = 12, N from
/// max(64, ceil(8 (2 + |z|) / |tau|)) doubled until the truncation estimate
/// meets the target and the disk condition holds.
template <std::floating_point Real>
ComputeParams choose_params(Complex<Real> z, Complex<Real> tau, Real target) {
  require_tau_off_cut(tau, "choose_params");
  if (!(target > 0)) throw precondition_error("choose_params: target must be positive");
  ComputeParams p;
  p.M = 12;
  p.auto_select = true;
  p.target = static_cast<double>(target);
  p.m_cd = default_em_length(tau);
  const Real n0 = std::ceil(Real(8) * (2 + std::abs(z)) / std::abs(tau));
  if (n0 > Real(kMaxProductLength)) throw capacity_error("choose_params: N would exceed 10^6");
  long N = std::max<long>(64, static_cast<long>(n0));
  while (!detail::disk_condition(z, tau, N) || detail::truncation_estimate(z, tau, N, p.M) > target) {
    N *= 2;
    if (N > kMaxProductLength) {
      std::ostringstream os;
      os << "choose_params: N would exceed 10^6 for z = " << z << ", tau = " << tau;
      throw capacity_error(os.str());
    }
  }
  p.N = N;
  return p;
}

/// Canonical log G(z; tau) from precomputed modular forms.
template <std::floating_point Real>
EvalResult<Real> log_double_gamma(Complex<Real> z, const ModularForms<Real>& forms, ComputeParams params) {
  const Complex<Real> tau = forms.tau;
  require_tau_off_cut(tau, "log_double_gamma");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw domain_error("log_double_gamma: z not finite");
  if (auto zero = find_lattice_zero(z, tau)) {
    std::ostringstream os;
    os << "log_double_gamma: z = " << z << " is the lattice zero -" << zero->first << " tau - " << zero->second;
    throw lattice_zero_error(os.str());
  }
  if (params.M < 1 || params.M > kMaxCorrectionOrder) throw precondition_error("log_double_gamma: M must be in 1..16");
  if (params.N < 1) throw precondition_error("log_double_gamma: N must be positive");
  if (params.N > kMaxProductLength) throw capacity_error("log_double_gamma: N exceeds 10^6");
  params.m_cd = forms.m_used;

  EvalResult<Real> res;
  const long N = params.N;
  detail::CompensatedSum<Real> sum;
  Real magnitude = 0;  // running sum of |terms| for the rounding estimate
  auto add = [&](Complex<Real> v) {
    sum += v;
    magnitude += std::abs(v);
  };
  add(-std::log(tau));
  add(-log_gamma(z));
  add(forms.a_tilde * z / tau);
  add(forms.b_tilde * z * z / (Real(2) * tau * tau));
  for (long m = 1; m <= N; ++m) add(detail::r_term(z, Complex<Real>(Real(m) * tau)));
  for (int k = 1; k <= params.M; ++k) add(detail::correction_term<Real>(static_cast<std::size_t>(k), z, tau, N));

  res.log_value = sum.value();
  res.value = std::exp(res.log_value);
  const Real trunc = detail::truncation_estimate(z, tau, N, params.M);
  const Real rounding = std::numeric_limits<Real>::epsilon() * (magnitude + 1);
  const Real forms_part = forms.error_estimate * (std::abs(z / tau) + std::abs(z * z / (tau * tau)));
  res.error_estimate = trunc + rounding + forms_part;
  res.params_used = params;
  if (!detail::disk_condition(z, tau, N)) res.warnings.emplace_back(kWarnDisk);
  if (!(res.error_estimate <= Real(1e-6))) res.warnings.emplace_back(kWarnPrecision);
  return res;
}

/// Canonical log G(z; tau).  With params.auto_select, N and M come from choose_params.
template <std::floating_point Real>
EvalResult<Real> log_double_gamma(Complex<Real> z, Complex<Real> tau, ComputeParams params = {}) {
  require_tau_off_cut(tau, "log_double_gamma");
  if (params.auto_select) {
    const long m_cd = params.m_cd;
    params = choose_params(z, tau, static_cast<Real>(params.target));
    if (m_cd > 0) params.m_cd = m_cd;
  }
  if (params.m_cd <= 0) params.m_cd = default_em_length(tau);
  const ModularForms<Real> forms = detail::cached_modular_forms(tau, params.m_cd);
  return log_double_gamma(z, forms, params);
}

/// G(z; tau), exactly 0 at (numerical) lattice zeros.
template <std::floating_point Real>
Complex<Real> double_gamma_value(Complex<Real> z, Complex<Real> tau, ComputeParams params = {}) {
  require_tau_off_cut(tau, "double_gamma_value");
  if (find_lattice_zero(z, tau)) return Complex<Real>(0);
  return log_double_gamma(z, tau, params).value;
}

}  // namespace barnes
