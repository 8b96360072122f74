#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "barnes/convergence.hpp"
#include "barnes/double_gamma.hpp"

using namespace barnes;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

double rel(cd a, cd b) { return std::abs(a - b) / std::abs(b); }

ComputeParams fixed(long N, int M, long m = 0) {
  ComputeParams p;
  p.auto_select = false;
  p.N = N;
  p.M = M;
  p.m_cd = m;
  return p;
}

std::vector<cd> taus_near_two(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> r(0, 1.5), th(-pi, pi);
  std::vector<cd> out;
  while (static_cast<int>(out.size()) < count) {
    const cd t = 2.0 + std::polar(r(rng), th(rng));
    if (std::abs(t) > 0.05) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST(DoubleGamma, PublishedExperimentAtRootThree) {
  const cd tau(std::sqrt(3.0), 0);
  const auto p = fixed(1000, 10, 1000);
  EXPECT_LE(std::abs(log_double_gamma(cd(1), tau, p).value - 1.0), 1e-12);
  EXPECT_LE(rel(log_double_gamma(tau, tau, p).value, cd(1.4889283353650864545337314811487)), 5e-13);
}

TEST(DoubleGamma, ClosedFormAtTau) {
  for (cd tau : taus_near_two(20, 3)) {
    const cd expected = std::pow(cd(2 * pi), (tau - 1.0) / 2.0) * std::pow(tau, -0.5);
    EXPECT_LE(rel(double_gamma_value(tau, tau), expected), 1e-9) << tau;
  }
  const cd t(2.7);
  EXPECT_LE(rel(double_gamma_value(t, t), std::pow(2 * pi, 0.85) / std::sqrt(2.7)), 1e-12);
}

TEST(DoubleGamma, Normalization) {
  for (cd tau : taus_near_two(20, 5)) EXPECT_LE(std::abs(double_gamma_value(cd(1), tau) - 1.0), 1e-10) << tau;
}

TEST(DoubleGamma, BarnesGFunctionAtTauOne) {
  // mpmath barnesg at 40 digits
  EXPECT_LE(rel(double_gamma_value(cd(2.5, 0.7), cd(1)), cd(0.8467153370117495641485, -0.04548370338172018890326)),
            1e-13);
  EXPECT_LE(rel(double_gamma_value(cd(0.3, -1.2), cd(1)), cd(2.698654217800772376079, -3.486328556431100309611)),
            1e-13);
  EXPECT_LE(rel(double_gamma_value(cd(4), cd(1)), cd(2)), 1e-13);
}

TEST(DoubleGamma, FunctionalEquations) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> zr(-2, 3), zi(-1.5, 1.5), tr(0.3, 2.5), ti(-1.5, 1.5);
  int done = 0;
  while (done < 50) {
    const cd z(zr(rng), zi(rng)), tau(tr(rng), ti(rng));
    bool near = false;  // keep 0.1 away from zeros of G and poles of the gamma factors
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n)
        near = near || std::abs(z + double(m) * tau + double(n)) < 0.1;
    if (near) continue;
    ++done;
    const cd g = log_double_gamma(z, tau).log_value;
    const cd e1 = log_double_gamma(z + 1.0, tau).log_value - log_gamma(z / tau) - g;
    const cd e2 = log_double_gamma(z + tau, tau).log_value - (tau - 1.0) / 2.0 * std::log(2 * pi) +
                  (z - 0.5) * std::log(tau) - log_gamma(z) - g;
    EXPECT_LE(std::abs(std::exp(e1) - 1.0), 1e-9) << z << " " << tau;
    EXPECT_LE(std::abs(std::exp(e2) - 1.0), 1e-9) << z << " " << tau;
  }
}

TEST(DoubleGamma, LatticeZeros) {
  EXPECT_EQ(double_gamma_value(cd(0), cd(1, 1)), cd(0));
  const cd r2(std::sqrt(2.0));
  EXPECT_EQ(double_gamma_value(-1.0 - r2, r2), cd(0));
  EXPECT_THROW(log_double_gamma(-1.0 - r2, r2), lattice_zero_error);
  const auto zero = find_lattice_zero(-2.0 - 3.0 * r2, r2);
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(zero->first, 3);
  EXPECT_EQ(zero->second, 2);
  EXPECT_FALSE(find_lattice_zero(cd(-0.5), r2).has_value());
}

TEST(DoubleGamma, GammaFactorFromFunctionalEquation) {
  // G(2; 3) = Gamma(1/3) G(1; 3)
  EXPECT_LE(rel(double_gamma_value(cd(2), cd(3)), cd(std::tgamma(1.0 / 3))), 1e-13);
}

TEST(DoubleGamma, DomainAndCapacityErrors) {
  EXPECT_THROW(log_double_gamma(cd(1), cd(-1)), domain_error);
  EXPECT_THROW(double_gamma_value(cd(1), cd(0)), domain_error);
  EXPECT_THROW(log_double_gamma(cd(1), cd(1), fixed(64, 17)), precondition_error);
  EXPECT_THROW(log_double_gamma(cd(1), cd(1), fixed(2'000'000, 4)), capacity_error);
  EXPECT_THROW(choose_params(cd(1e6), cd(1e-3), 1e-10), capacity_error);
}

TEST(DoubleGamma, ChooseParams) {
  const auto a = choose_params(cd(1), cd(1), 1e-10);
  EXPECT_GE(a.N, 64);
  EXPECT_EQ(a.M, 12);
  EXPECT_GE(choose_params(cd(100), cd(0.1), 1e-10).N, 8160);
  const cd tau(-1e-4, 1);
  const auto c = choose_params(cd(10, 10), tau, 1e-10);
  EXPECT_TRUE(detail::disk_condition(cd(10, 10), tau, c.N));
  const auto r = log_double_gamma(cd(10, 10), tau);
  EXPECT_TRUE(std::find(r.warnings.begin(), r.warnings.end(), kWarnDisk) == r.warnings.end());
}

TEST(DoubleGamma, ConvergenceOrderInN) {
  const cd z(2, 1), tau(std::sqrt(2.0));
  const std::vector<long> Ns = {32, 64, 128, 256};
  const auto rows = order_n_study(z, tau, {2, 4, 6}, Ns);
  const double floor = order_floor(std::abs(log_double_gamma(z, tau).log_value));
  for (int M : {2, 4, 6}) {
    std::vector<double> x, y;
    for (const auto& r : rows)
      if (r.M == M) x.push_back(double(r.N)), y.push_back(r.error);
    EXPECT_LE(loglog_slope(x, y, floor), -(M + 0.8)) << "M = " << M;
  }
}

TEST(DoubleGamma, ErrorEstimateTracksTruncation) {
  using R = long double;
  const std::complex<R> z(2, 1), tau(std::sqrt(2.0L));
  const auto exact = log_double_gamma<R>(z, tau, fixed(1 << 14, 12)).log_value;
  for (long N : {16, 32, 64}) {
    const auto r = log_double_gamma<R>(z, tau, fixed(N, 4));
    const R actual = std::abs(r.log_value - exact);
    EXPECT_GE(r.error_estimate, actual / 10) << N;
    EXPECT_LE(r.error_estimate, actual * 1000) << N;
  }
}

TEST(DoubleGamma, PrecisionWarning) {
  const auto r = log_double_gamma(cd(5, 1), cd(1), fixed(2, 1));
  EXPECT_TRUE(std::find(r.warnings.begin(), r.warnings.end(), kWarnPrecision) != r.warnings.end());
  EXPECT_GT(r.error_estimate, 1e-6);
  EXPECT_TRUE(log_double_gamma(cd(1.5), cd(1)).warnings.empty());
}

TEST(DoubleGamma, LongDoubleAgreesWithDouble) {
  for (auto [z, t] : std::vector<std::pair<cd, cd>>{{{0.7, 0.3}, {1.2, 0.5}}, {{-1.5, 2}, {0.8, -0.9}}, {{3, 0}, {0.4, 0}}}) {
    const auto d = log_double_gamma(z, t).log_value;
    const auto l = log_double_gamma<long double>({z.real(), z.imag()}, {t.real(), t.imag()}).log_value;
    EXPECT_LE(std::abs(std::complex<double>(l) - d), 1e-12 * (1 + std::abs(d))) << z << " " << t;
  }
}

TEST(DoubleGamma, ValueIsExpOfLog) {
  const auto r = log_double_gamma(cd(1.3, -0.4), cd(0.6, 0.2));
  EXPECT_EQ(r.value, std::exp(r.log_value));
  EXPECT_GT(r.params_used.N, 0);
  EXPECT_GT(r.params_used.m_cd, 0);
}

TEST(DoubleGamma, Deterministic) {
  const auto a = log_double_gamma(cd(2.2, 0.9), cd(1.1, 0.7));
  const auto b = log_double_gamma(cd(2.2, 0.9), cd(1.1, 0.7));
  EXPECT_EQ(a.log_value, b.log_value);
  EXPECT_EQ(a.error_estimate, b.error_estimate);
}
