#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "barnes/kernels/elliptic.hpp"
#include "barnes/kernels/log_gamma.hpp"
#include "barnes/kernels/polygamma.hpp"
#include "barnes/kernels/q_pochhammer.hpp"
#include "barnes/kernels/quadrature.hpp"

using namespace barnes;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

double rel(cd a, cd b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

// Reference values below were computed once with mpmath at 30 digits.

}  // namespace

TEST(LogGamma, TrivialValues) {
  EXPECT_NEAR(std::abs(log_gamma(cd(1))), 0, 1e-14);
  EXPECT_NEAR(std::abs(log_gamma(cd(2))), 0, 1e-14);
  EXPECT_NEAR(std::abs(log_gamma(cd(0.5)) - 0.5 * std::log(pi)), 0, 1e-15);
  EXPECT_NEAR(log_gamma(11.0), std::log(3628800.0), 1e-13);
  EXPECT_THROW(log_gamma(cd(0)), pole_error);
  EXPECT_THROW(log_gamma(cd(-3)), pole_error);
}

TEST(LogGamma, ReferenceValues) {
  EXPECT_LT(rel(log_gamma(cd(3, 4)), cd(-1.75662678460378411053, 4.74266443803465792819)), 1e-14);
  EXPECT_LT(rel(log_gamma(cd(-2.5, 0.3)), cd(-0.432088892613201920515, -9.09334542128974150731)), 1e-13);
  EXPECT_LT(rel(log_gamma(cd(-2.5, -0.3)), cd(-0.432088892613201920515, 9.09334542128974150731)), 1e-13);
}

TEST(LogGamma, AgreesWithLanczos) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-20, 40), im(-30, 30);
  for (int i = 0; i < 200; ++i) {
    const cd z(re(rng), im(rng));
    if (std::abs(z.imag()) < 0.5 && z.real() < 0.5) continue;
    EXPECT_LT(std::abs(log_gamma(z) - log_gamma_lanczos(z)), 1e-12 * (1 + std::abs(log_gamma(z)))) << z;
  }
  EXPECT_LT(std::abs(log_gamma(cd(3, 4)) - log_gamma_lanczos(cd(3, 4))), 1e-12);
}

TEST(LogGamma, Recurrence) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 100; ++i) {
    const double r = 50 * u(rng), th = (u(rng) - 0.5) * pi * 0.98;
    const cd z = std::polar(r, th);
    const cd lhs = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
    EXPECT_LE(std::abs(lhs), 1e-12 * (1 + std::abs(log_gamma(z + 1.0)))) << z;
  }
}

TEST(LogGamma, Reflection) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> re(-10, 10), im(-5, 5);
  int done = 0;
  while (done < 50) {
    const cd z(re(rng), im(rng));
    if (std::abs(z - std::round(z.real())) < 0.1) continue;
    const cd lhs = std::exp(log_gamma(z)) * std::exp(log_gamma(1.0 - z));
    const cd rhs = pi / std::sin(pi * z);
    EXPECT_LT(rel(lhs, rhs), 1e-10) << z;
    ++done;
  }
}

TEST(LogGamma, LargeArgument) {
  const cd z(1e6, 3e5);
  const cd s = (z - 0.5) * std::log(z) - z + detail::half_log_two_pi<double> + 1.0 / (12.0 * z);
  EXPECT_LT(rel(log_gamma(z), s), 1e-15);
  EXPECT_LT(std::abs(log_gamma_correction(z) - 1.0 / (12.0 * z)), 1e-20);
}

TEST(Polygamma, TrivialValues) {
  EXPECT_NEAR(polygamma(0, cd(1)).real(), -0.5772156649015329, 1e-15);
  EXPECT_NEAR(polygamma(1, cd(1)).real(), pi * pi / 6, 1e-14);
  EXPECT_NEAR(polygamma(2, cd(1)).real(), -2 * 1.2020569031595942, 1e-14);
  EXPECT_THROW(polygamma(0, cd(-2)), pole_error);
  EXPECT_THROW(polygamma(13, cd(1)), domain_error);
}

TEST(Polygamma, ReferenceValues) {
  EXPECT_LT(rel(polygamma(3, cd(2.5, 1)), cd(0.041543109611065884239, -0.163057156590829184181)), 1e-13);
  EXPECT_LT(rel(polygamma(0, cd(-3.3, 0.7)), cd(1.42719989891603163630, 2.93575847692374316787)), 1e-13);
}

TEST(Polygamma, FiniteDifferenceOfLowerOrder) {
  const cd z(2.5, 1);
  const double h = 1e-4;
  const cd fd = (polygamma(2, z + h) - polygamma(2, z - h)) / (2 * h);
  EXPECT_LT(rel(polygamma(3, z), fd), 1e-6);
  for (int k = 0; k < 12; ++k) {
    const cd w(1.3, -0.8);
    const double hh = 1e-3;
    const cd d = (-polygamma(k, w + 2 * hh) + 8.0 * polygamma(k, w + hh) - 8.0 * polygamma(k, w - hh) +
                  polygamma(k, w - 2 * hh)) / (12 * hh);
    EXPECT_LT(rel(polygamma(k + 1, w), d), 1e-7) << k;
  }
}

TEST(Polygamma, Recurrence) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 100; ++i) {
    const double r = 0.2 + 50 * u(rng), th = (u(rng) - 0.5) * pi * 0.98;
    const cd z = std::polar(r, th);
    double fact = 1;
    for (int k = 0; k <= 9; ++k) {
      if (k > 0) fact *= k;
      const cd step = (k % 2 == 0 ? 1.0 : -1.0) * fact * std::pow(z, -(k + 1));
      const cd lhs = polygamma(k, z + 1.0);
      EXPECT_LT(std::abs(lhs - polygamma(k, z) - step), 1e-11 * (std::abs(lhs) + std::abs(step))) << k << " " << z;
    }
  }
}

TEST(Polygamma, DigammaMinusLog) {
  const cd w(300, 200);
  const cd direct = polygamma(0, w) - std::log(w);
  EXPECT_LT(std::abs(digamma_minus_log(w) - direct), 1e-13);
  EXPECT_LT(rel(digamma_minus_log(w), -1.0 / (2.0 * w) - 1.0 / (12.0 * w * w)), 1e-8);
  EXPECT_LT(rel(digamma_minus_log(cd(2, 1)), polygamma(0, cd(2, 1)) - std::log(cd(2, 1))), 1e-14);
}

TEST(QPochhammer, Values) {
  EXPECT_EQ(q_pochhammer(cd(0), cd(0.3, 0.2)), cd(1));
  EXPECT_EQ(q_pochhammer(cd(0.4, 0.1), cd(0)), cd(0.6, -0.1));
  EXPECT_NEAR(q_pochhammer(cd(0.5), cd(0.5)).real(), 0.288788095086602421279, 1e-15);
  EXPECT_THROW(q_pochhammer(cd(1), cd(1)), domain_error);
}

TEST(QPochhammer, PentagonalNumberTheorem) {
  // (q;q)_inf = sum_k (-1)^k q^{k(3k-1)/2}
  const cd q = 0.6 * std::exp(cd(0, 1.1));
  cd s = 1;
  for (int k = 1; k < 60; ++k) {
    const double sg = k % 2 ? -1 : 1;
    s += sg * (std::pow(q, k * (3 * k - 1) / 2) + std::pow(q, k * (3 * k + 1) / 2));
  }
  EXPECT_LT(rel(q_pochhammer(q, q), s), 1e-13);
}

TEST(Elliptic, Limits) {
  const auto r = elliptic_KE(1e-9);
  EXPECT_NEAR(r.K, pi / 2, 1e-15);
  EXPECT_NEAR(r.E, pi / 2, 1e-15);
  const auto s = elliptic_KE(1 / std::sqrt(2.0));
  EXPECT_NEAR(s.K, s.Kprime, 1e-14);
  EXPECT_THROW(elliptic_KE(1.0), domain_error);
  EXPECT_THROW(elliptic_KE(0.0), domain_error);
}

TEST(Elliptic, AgainstQuadratureAndReference) {
  const double k = 0.8;
  const auto r = elliptic_KE(k);
  EXPECT_NEAR(r.K, 1.99530277766472940382, 1e-14);
  EXPECT_NEAR(r.E, 1.27634994316990641583, 1e-14);
  EXPECT_NEAR(r.Kprime, 1.75075380291575252037, 1e-14);
  // K = int_0^{pi/2} (1 - k^2 sin^2)^{-1/2}, E = int (1 - k^2 sin^2)^{1/2}, by Gauss-Legendre
  const auto nodes = gauss_legendre<double>(64);
  double K = 0, E = 0;
  for (auto [x, w] : nodes) {
    const double s = std::sin(x * pi / 2);
    const double d = 1 - k * k * s * s;
    K += w * (pi / 2) / std::sqrt(d);
    E += w * (pi / 2) * std::sqrt(d);
  }
  EXPECT_NEAR(r.K, K, 1e-11);
  EXPECT_NEAR(r.E, E, 1e-11);
}

TEST(Elliptic, LegendreRelation) {
  for (int i = 1; i <= 9; ++i) {
    const double k = 0.1 * i;
    const auto a = elliptic_KE(k);
    const auto b = elliptic_KE(std::sqrt(1 - k * k));
    EXPECT_NEAR(a.E * a.Kprime + b.E * a.K - a.K * a.Kprime, pi / 2, 1e-11) << k;
  }
}

TEST(Quadrature, SemiaxisBasics) {
  const auto one = integrate_semiaxis<double>([](double x) { return std::exp(-x); });
  EXPECT_NEAR(std::abs(one - 1.0), 0, 1e-13);
  const auto z2 = integrate_semiaxis<double>([](double x) { return x * std::exp(-x) / (-std::expm1(-x)); });
  EXPECT_NEAR(std::abs(z2 - pi * pi / 6), 0, 1e-13);
  // complex-valued integrand: int e^{-(1+i) x} = 1/(1+i)
  const auto c = integrate_semiaxis<double>([](double x) { return std::exp(-cd(1, 1) * x); });
  EXPECT_NEAR(std::abs(c - 1.0 / cd(1, 1)), 0, 1e-13);
  // singular but integrable at 0: int x^{-1/2} e^{-x} = sqrt(pi)
  const auto g = integrate_semiaxis<double>([](double x) { return std::exp(-x) / std::sqrt(x); });
  EXPECT_NEAR(std::abs(g - std::sqrt(pi)), 0, 1e-12);
}

TEST(Quadrature, ReportsNonConvergence) {
  QuadratureSpec spec{1e-14, 1};
  EXPECT_THROW(integrate_semiaxis<double>([](double x) { return std::cos(40 * x) * std::exp(-x / 50); }, spec),
               convergence_error);
  EXPECT_THROW(integrate_semiaxis<double>([](double x) { return std::exp(-x); }, QuadratureSpec{1e-17, 5}),
               precondition_error);
}

TEST(Quadrature, GaussLegendre) {
  const auto nodes = gauss_legendre<double>(32);
  double s = 0, m = 0;
  for (auto [x, w] : nodes) {
    s += w;
    m += w * std::pow(x, 40);  // exact up to degree 63
  }
  EXPECT_NEAR(s, 1, 1e-15);
  EXPECT_NEAR(m, 1.0 / 41, 1e-15);
}
