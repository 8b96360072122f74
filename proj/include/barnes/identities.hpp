#pragma once

// Residual checks for the transformation identities of G(z; tau), Gamma_2,
// b0(tau) and D(tau).  Value identities are compared multiplicatively as
// |exp(log lhs - log rhs) - 1|, so branch choices of the logs never matter.

#include <cmath>
#include <complex>
#include <cstdint>
#include <exception>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "barnes/asymptotics.hpp"
#include "barnes/double_gamma.hpp"
#include "barnes/gamma2.hpp"
#include "barnes/kernels/q_pochhammer.hpp"
#include "barnes/modular_forms.hpp"

namespace barnes {

struct SamplePoint {
  Complex<double> z;
  Complex<double> tau;
  int p = 0;
  int q = 0;
};

struct IdentityReport {
  std::string id;
  std::vector<SamplePoint> samples;
  std::vector<double> residuals;
  double max_residual = 0;
  double tolerance = 0;
  bool passed = false;
  std::vector<std::string> notes;
};

namespace detail {

inline double ratio_residual(Complex<double> log_ratio) {
  if (!std::isfinite(log_ratio.real()) || !std::isfinite(log_ratio.imag()))
    return std::numeric_limits<double>::infinity();
  return std::abs(expm1(log_ratio));
}

inline Complex<double> lnG(Complex<double> z, Complex<double> tau) { return log_double_gamma(z, tau).log_value; }

inline const double kLn2Pi = std::log(2 * std::numbers::pi);

}  // namespace detail

/// -2 pi i tau G(1/2 + z; tau) G(1/2 - z; -tau) = (-e^{2 pi i z}; q)_inf / (q; q)_inf, q = e^{2 pi i tau}.
inline double check_reflection(Complex<double> z, Complex<double> tau) {
  if (!(tau.imag() > 0)) throw domain_error("check_reflection: requires Im tau > 0");
  const Complex<double> i{0, 1};
  const double pi = std::numbers::pi;
  const Complex<double> q = std::exp(2 * pi * i * tau);
  const Complex<double> num = q_pochhammer(Complex<double>(-std::exp(2 * pi * i * z)), q);
  const Complex<double> den = q_pochhammer(q, q);
  const Complex<double> lhs = std::log(-2 * pi * i * tau) + detail::lnG(0.5 + z, tau) + detail::lnG(0.5 - z, -tau);
  return detail::ratio_residual(lhs - std::log(num / den));
}

/// G(z; tau) = (2 pi)^{(z/2)(1 - 1/tau)} tau^{(z - z^2)/(2 tau) + z/2 - 1} G(z/tau; 1/tau).
inline double check_modular(Complex<double> z, Complex<double> tau) {
  require_tau_off_cut(tau, "check_modular");
  const Complex<double> rhs = z / 2.0 * (1.0 - 1.0 / tau) * detail::kLn2Pi +
                              ((z - z * z) / (2.0 * tau) + z / 2.0 - 1.0) * std::log(tau) +
                              detail::lnG(z / tau, 1.0 / tau);
  return detail::ratio_residual(detail::lnG(z, tau) - rhs);
}

enum class MultiplicationForm {
  general,     // G(z; p tau/q) as a p x q product
  q_equals_1,  // G(pz; p tau) = prod_i G(z + i/p; tau) / G((1+i)/p; tau)
  q_equals_p,  // G(pz; tau) as a p x p product
};

inline double check_multiplication(Complex<double> z, Complex<double> tau, int p, int q,
                                   MultiplicationForm form = MultiplicationForm::general) {
  require_tau_off_cut(tau, "check_multiplication");
  if (p < 1 || q < 1 || p > 4 || q > 4) throw domain_error("check_multiplication: p, q must be in 1..4");
  const double dp = p, dq = q;
  detail::CompensatedSum<double> prod;
  switch (form) {
    case MultiplicationForm::general: {
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
          const Complex<double> shift = double(j) * tau / dq;
          prod += detail::lnG((z + double(i)) / dp + shift, tau) - detail::lnG((1.0 + i) / dp + shift, tau);
        }
      const Complex<double> rhs = (z - 1.0) * (dq * z - dp * tau) / (2.0 * dp * tau) * std::log(dq) -
                                  (dq - 1) / 2 * (z - 1.0) * detail::kLn2Pi + prod.value();
      return detail::ratio_residual(detail::lnG(z, dp * tau / dq) - rhs);
    }
    case MultiplicationForm::q_equals_1: {
      for (int i = 0; i < p; ++i)
        prod += detail::lnG(z + double(i) / dp, tau) - detail::lnG(Complex<double>((1.0 + i) / dp), tau);
      return detail::ratio_residual(detail::lnG(dp * z, dp * tau) - prod.value());
    }
    case MultiplicationForm::q_equals_p: {
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
          const Complex<double> shift = (double(i) + double(j) * tau) / dp;
          prod += detail::lnG(z + shift, tau) - detail::lnG((1.0 + double(i) + double(j) * tau) / dp, tau);
        }
      const Complex<double> rhs = (dp * z - 1.0) * (dp * z - tau) / (2.0 * tau) * std::log(dp) -
                                  (dp - 1) / 2 * (dp * z - 1.0) * detail::kLn2Pi + prod.value();
      return detail::ratio_residual(detail::lnG(dp * z, tau) - rhs);
    }
  }
  return std::numeric_limits<double>::infinity();
}

/// G(z; tau) = ((1+tau)/tau)^{z^2/(2 tau) - (1+tau) z/(2 tau) + 1} (2 pi)^{-z/(2 tau)} G(z+1; 1+tau) G(z/tau; 1+1/tau).
inline double check_product_identity(Complex<double> z, Complex<double> tau) {
  require_tau_off_cut(tau, "check_product_identity");
  const Complex<double> e = z * z / (2.0 * tau) - (1.0 + tau) * z / (2.0 * tau) + 1.0;
  const Complex<double> rhs = e * std::log((1.0 + tau) / tau) - z / (2.0 * tau) * detail::kLn2Pi +
                              detail::lnG(z + 1.0, 1.0 + tau) + detail::lnG(z / tau, 1.0 + 1.0 / tau);
  return detail::ratio_residual(detail::lnG(z, tau) - rhs);
}

/// G(z+1) = Gamma(z/tau) G(z) and G(z+tau) = (2 pi)^{(tau-1)/2} tau^{1/2-z} Gamma(z) G(z).
inline std::pair<double, double> check_functional_equations(Complex<double> z, Complex<double> tau) {
  require_tau_off_cut(tau, "check_functional_equations");
  const Complex<double> g = detail::lnG(z, tau);
  const double r1 = detail::ratio_residual(detail::lnG(z + 1.0, tau) - log_gamma(z / tau) - g);
  const double r2 = detail::ratio_residual(detail::lnG(z + tau, tau) - (tau - 1.0) / 2.0 * detail::kLn2Pi -
                                           (0.5 - z) * std::log(tau) - log_gamma(z) - g);
  return {r1, r2};
}

/// Gamma_2 symmetry |Gamma_2(z; w1, w2) / Gamma_2(z; w2, w1) - 1|.
inline double check_gamma2_symmetry(Complex<double> z, Complex<double> w1, Complex<double> w2) {
  return detail::ratio_residual(gamma2(z, w1, w2).log_value - gamma2(z, w2, w1).log_value);
}

/// Both Gamma_2 shift equations; returns the larger residual.
inline double check_gamma2_functional(Complex<double> z, Complex<double> w1, Complex<double> w2) {
  const Complex<double> g = gamma2(z, w1, w2).log_value;
  auto shift = [&](Complex<double> a, Complex<double> b) {
    const Complex<double> rhs =
        detail::kLn2Pi / 2.0 + (0.5 - z / b) * std::log(b) - log_gamma(Complex<double>(z / b)) + g;
    return detail::ratio_residual(gamma2(z + a, w1, w2).log_value - rhs);
  };
  return std::max(shift(w1, w2), shift(w2, w1));
}

/// Gamma_2(w1; w1, w2) = sqrt(2 pi / w2).
inline double check_gamma2_normalization(Complex<double> w1, Complex<double> w2) {
  return detail::ratio_residual(gamma2(w1, w1, w2).log_value - 0.5 * (detail::kLn2Pi - std::log(w2)));
}

/// b0(1/tau) - b0(tau) - log(tau)(1 + 15 tau + tau^2)/(12 tau), additive.
inline Complex<double> b0_inversion_defect(Complex<double> tau) {
  return b0_of_tau(1.0 / tau) - b0_of_tau(tau) - std::log(tau) / (12.0 * tau) * (1.0 + 15.0 * tau + tau * tau);
}

/// b0(tau) - b0(1+tau) - b0(1+1/tau) - log(2 pi (1+tau)^3)/2 + (17 + 1/(tau(1+tau))) log(tau)/12, additive.
inline Complex<double> b0_shift_defect(Complex<double> tau) {
  return b0_of_tau(tau) - b0_of_tau(1.0 + tau) - b0_of_tau(1.0 + 1.0 / tau) -
         0.5 * (detail::kLn2Pi + 3.0 * std::log(1.0 + tau)) +
         (17.0 + 1.0 / (tau * (1.0 + tau))) / 12.0 * std::log(tau);
}

/// b0(p tau/q) expressed through b0(tau) and a p x q grid of log G values, additive.
inline Complex<double> b0_multiplication_defect(Complex<double> tau, int p, int q) {
  const double dp = p, dq = q;
  const Complex<double> b = b0_of_tau(tau);
  const Complex<double> t2 = tau * dp / dq;
  detail::CompensatedSum<double> grid;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) grid += detail::lnG((1.0 + i) / dp + double(j) * tau / dq, tau);
  const Complex<double> rhs = dp * dq * (b + asymptotic_a0(tau) * std::log(tau)) -
                              asymptotic_a0(t2) * std::log(dp * tau) +
                              (dp - 1 + (dq - 1) * (dp * (tau + 1.0) + 1.0)) * 0.25 * detail::kLn2Pi +
                              0.5 * std::log(dq) - grid.value();
  return b0_of_tau(t2) - rhs;
}

namespace detail {

/// |d| together with a note when d sits on a nonzero multiple of 2 pi i.
inline double additive_residual(Complex<double> d, std::vector<std::string>& notes, const std::string& where) {
  const double k = std::round(d.imag() / (2 * std::numbers::pi));
  if (k != 0 && std::abs(d - Complex<double>(0, 2 * std::numbers::pi * k)) < 1e-6) {
    std::ostringstream os;
    os << where << ": constant offset of " << k << " * 2 pi i";
    notes.push_back(os.str());
  }
  return std::abs(d);
}

/// Distance from z to the lattice {-m tau - n : m, n >= 0}.
inline double distance_to_lattice(Complex<double> z, Complex<double> tau, int extent = 8) {
  double d = std::numeric_limits<double>::infinity();
  for (int m = 0; m <= extent; ++m)
    for (int n = 0; n <= extent; ++n) d = std::min(d, std::abs(z + double(m) * tau + double(n)));
  return d;
}

struct ToleranceSet {
  double functional, reflection, modular, multiplication, product, gamma2, b0, d_reflection;
};

inline ToleranceSet tolerance_profile(const std::string& name) {
  const ToleranceSet base{1e-9, 1e-8, 1e-9, 1e-7, 1e-8, 1e-9, 1e-7, 1e-6};
  if (name == "default") return base;
  if (name == "strict")
    return {base.functional / 10, base.reflection / 10, base.modular / 10, base.multiplication / 10,
            base.product / 10,    base.gamma2 / 10,     base.b0 / 10,      base.d_reflection / 10};
  throw domain_error("run_suite: unknown tolerance profile '" + name + "'");
}

class SuiteSampler {
 public:
  explicit SuiteSampler(std::uint64_t seed) : rng_(seed) {}

  Complex<double> z() { return {uniform(0.2, 3), uniform(-1, 1)}; }
  Complex<double> tau() { return {uniform(0.5, 2), uniform(0, 1)}; }
  Complex<double> tau_upper() { return {uniform(0.5, 2), uniform(0.5, 1.5)}; }

  /// z from the box, at least 0.1 from every zero or pole the check touches.
  template <typename Far>
  Complex<double> z_away(Far&& far) {
    for (;;) {
      const Complex<double> c = z();
      if (far(c)) return c;
    }
  }

 private:
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  std::mt19937_64 rng_;
};

class ReportBuilder {
 public:
  ReportBuilder(std::string id, double tolerance) {
    report_.id = std::move(id);
    report_.tolerance = tolerance;
  }

  template <typename Check>
  void run(const SamplePoint& s, Check&& check) {
    report_.samples.push_back(s);
    double r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = std::numeric_limits<double>::infinity();
      report_.notes.push_back(e.what());
    }
    report_.residuals.push_back(r);
  }

  std::vector<std::string>& notes() { return report_.notes; }

  IdentityReport finish() {
    double mx = 0;
    bool finite = true;
    for (double r : report_.residuals) {
      if (!std::isfinite(r)) finite = false;
      mx = std::max(mx, r);
    }
    report_.max_residual = finite ? mx : std::numeric_limits<double>::infinity();
    report_.passed = finite && report_.max_residual <= report_.tolerance;
    return std::move(report_);
  }

 private:
  IdentityReport report_;
};

inline constexpr int kSuiteSamples = 6;

}  // namespace detail

/// Runs every identity check on grids drawn from a generator seeded by `seed`.
/// Reports come back in a fixed order; a failing or throwing check never stops
/// the suite.
inline std::vector<IdentityReport> run_suite(std::uint64_t seed, const std::string& profile = "default") {
  using detail::ReportBuilder;
  const detail::ToleranceSet tol = detail::tolerance_profile(profile);
  detail::SuiteSampler rng(seed);
  std::vector<IdentityReport> out;
  const int n = detail::kSuiteSamples;
  auto off_lattice = [](Complex<double> tau) {
    return [tau](Complex<double> c) { return detail::distance_to_lattice(c, tau) >= 0.1; };
  };

  {
    ReportBuilder b("functional", tol.functional);
    for (int k = 0; k < n; ++k) {
      const auto t = rng.tau();
      const auto z = rng.z_away(off_lattice(t));
      b.run({z, t}, [&] {
        const auto [r1, r2] = check_functional_equations(z, t);
        return std::max(r1, r2);
      });
    }
    out.push_back(b.finish());
  }
  {
    ReportBuilder b("reflection", tol.reflection);
    for (int k = 0; k < n; ++k) {
      const auto t = rng.tau_upper();
      // zeros of G(1/2 - z; -tau) sit at z = 1/2 + n - m tau
      const auto z = rng.z_away([&](Complex<double> c) {
        return detail::distance_to_lattice(Complex<double>(0.5) - c, -t) >= 0.1 &&
               detail::distance_to_lattice(0.5 + c, t) >= 0.1;
      });
      b.run({z, t}, [&] { return check_reflection(z, t); });
    }
    out.push_back(b.finish());
  }
  {
    ReportBuilder b("modular", tol.modular);
    for (int k = 0; k < n; ++k) {
      const auto t = rng.tau();
      const auto z = rng.z_away(off_lattice(t));
      b.run({z, t}, [&] { return check_modular(z, t); });
    }
    out.push_back(b.finish());
  }
  const std::vector<std::pair<int, int>> pq = {{2, 1}, {1, 2}, {2, 3}, {3, 2}};
  {
    ReportBuilder b("multiplication", tol.multiplication);
    for (auto [p, q] : pq) {
      const auto t = rng.tau();
      const auto z = rng.z();
      b.run({z, t, p, q}, [&] { return check_multiplication(z, t, p, q); });
    }
    out.push_back(b.finish());
  }
  {
    ReportBuilder b("multiplication-scaled-period", tol.multiplication);
    for (int p : {2, 3, 4}) {
      const auto t = rng.tau();
      const auto z = rng.z();
      b.run({z, t, p, 1}, [&] { return check_multiplication(z, t, p, 1, MultiplicationForm::q_equals_1); });
    }
    out.push_back(b.finish());
  }
  {
    ReportBuilder b("multiplication-scaled-argument", tol.multiplication);
    for (int p : {2, 3}) {
      const auto t = rng.tau();
      const auto z = rng.z();
      b.run({z, t, p, p}, [&] { return check_multiplication(z, t, p, p, MultiplicationForm::q_equals_p); });
    }
    out.push_back(b.finish());
  }
  {
    ReportBuilder b("product", tol.product);
    for (int k = 0; k < n; ++k) {
      const auto t = rng.tau();
      const auto z = rng.z_away(off_lattice(t));
      b.run({z, t}, [&] { return check_product_identity(z, t); });
    }
    out.push_back(b.finish());
  }
  {
    ReportBuilder sym("gamma2-symmetry", tol.gamma2);
    ReportBuilder fe("gamma2-functional", tol.gamma2);
    ReportBuilder norm("gamma2-normalization", tol.gamma2);
    for (int k = 0; k < n; ++k) {
      const auto w1 = rng.tau();
      const auto w2 = rng.tau();
      const auto z = rng.z();
      sym.run({z, w2 / w1}, [&] { return check_gamma2_symmetry(z, w1, w2); });
      fe.run({z, w2 / w1}, [&] { return check_gamma2_functional(z, w1, w2); });
      norm.run({w1, w2 / w1}, [&] { return check_gamma2_normalization(w1, w2); });
    }
    out.push_back(sym.finish());
    out.push_back(fe.finish());
    out.push_back(norm.finish());
  }
  const std::vector<Complex<double>> b0_taus = {{2, 0}, {std::sqrt(2.0), 0}, {1, 1}};
  {
    ReportBuilder b("b0-inversion", tol.b0);
    for (auto t : b0_taus)
      b.run({0, t}, [&] { return detail::additive_residual(b0_inversion_defect(t), b.notes(), "b0-inversion"); });
    out.push_back(b.finish());
  }
  {
    ReportBuilder b("b0-shift", tol.b0);
    for (auto t : b0_taus)
      b.run({0, t}, [&] { return detail::additive_residual(b0_shift_defect(t), b.notes(), "b0-shift"); });
    out.push_back(b.finish());
  }
  {
    ReportBuilder b("b0-multiplication", tol.b0);
    for (auto t : b0_taus)
      for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}, {2, 3}})
        b.run({0, t, p, q}, [&] {
          return detail::additive_residual(b0_multiplication_defect(t, p, q), b.notes(), "b0-multiplication");
        });
    out.push_back(b.finish());
  }
  {
    ReportBuilder b("d-reflection", tol.d_reflection);
    for (double k : {0.2, 0.4, 1 / std::sqrt(2.0), 0.8})
      b.run({k, 0}, [&] { return d_reflection_residual<double>(k); });
    out.push_back(b.finish());
  }
  return out;
}

inline bool all_passed(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace barnes
