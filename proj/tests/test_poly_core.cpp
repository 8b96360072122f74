#include <gtest/gtest.h>

#include <fstream>
#include <thread>
#include <string>

#include <json.hpp>

#include "barnes/poly_core.hpp"
#include "barnes/poly_identities.hpp"

using namespace barnes;

namespace {

RationalPolynomial poly(std::initializer_list<const char*> cs) {
  std::vector<Rational> v;
  for (auto c : cs) v.push_back(Rational::parse(c));
  return RationalPolynomial(std::move(v));
}

}  // namespace

TEST(Rational, NormalizesAndPrints) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational::parse("10/4"), Rational(BigInt(5), BigInt(2)));
  EXPECT_EQ((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str(), "1/2");
  EXPECT_THROW(Rational(1) / Rational(0), domain_error);
  EXPECT_DOUBLE_EQ(Rational::parse("-1/30").to<double>(), -1.0 / 30);
}

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli_number(0), Rational(1));
  EXPECT_EQ(bernoulli_number(1).str(), "-1/2");
  EXPECT_EQ(bernoulli_number(2).str(), "1/6");
  EXPECT_EQ(bernoulli_number(4).str(), "-1/30");
  EXPECT_EQ(bernoulli_number(6).str(), "1/42");
  EXPECT_EQ(bernoulli_number(8).str(), "-1/30");
  EXPECT_EQ(bernoulli_number(7), Rational(0));
  EXPECT_EQ(bernoulli_number(12).str(), "-691/2730");
  for (std::size_t m = 1; m < 30; ++m) EXPECT_TRUE(bernoulli_number(2 * m + 1).is_zero());
}

TEST(Bernoulli, Polynomials) {
  EXPECT_EQ(bernoulli_polynomial(0), poly({"1"}));
  EXPECT_EQ(bernoulli_polynomial(1), poly({"-1/2", "1"}));
  EXPECT_EQ(bernoulli_polynomial(4), poly({"-1/30", "0", "1", "-2", "1"}));
  // B_n(1 - x) = (-1)^n B_n(x)
  for (std::size_t n = 0; n < 15; ++n) {
    const auto b = bernoulli_polynomial(n);
    const std::complex<double> x(0.3, 0.2);
    const auto lhs = b.eval(1.0 - x);
    const auto rhs = (n % 2 ? -1.0 : 1.0) * b.eval(x);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12 * (1 + std::abs(rhs)));
  }
}

TEST(QPoly, SpecExamples) {
  EXPECT_EQ(q_poly(0), poly({"1"}));
  EXPECT_EQ(q_poly(2), poly({"1/6", "1/2", "1/6"}));
  EXPECT_EQ(q_poly(5), poly({"0", "1/12", "0", "0", "1/12"}));
  EXPECT_EQ(q_poly_recursive(1), poly({"-1/2", "-1/2"}));
  EXPECT_EQ(q_poly_recursive(3), poly({"0", "-1/4", "-1/4"}));
  const Rational c = Rational::parse("1222277/220");
  EXPECT_EQ(q_poly_recursive(21), RationalPolynomial::monomial(c, 1) + RationalPolynomial::monomial(c, 20));
}

TEST(QPoly, MatchesReferenceTable) {
  std::ifstream in(std::string(BARNES_TEST_DATA) + "/q_polynomials.json");
  ASSERT_TRUE(in.good());
  const auto doc = nlohmann::json::parse(in);
  ASSERT_EQ(doc["polynomials"].size(), 22u);
  for (const auto& entry : doc["polynomials"]) {
    const auto n = entry["n"].get<std::size_t>();
    const Rational scale = Rational::parse(entry["scale"].get<std::string>());
    std::vector<Rational> c;
    for (const auto& v : entry["coeffs"]) c.push_back(Rational(v.get<long>()) * scale);
    EXPECT_EQ(q_poly(n), RationalPolynomial(c)) << "n = " << n;
    EXPECT_EQ(q_poly_recursive(n), RationalPolynomial(c)) << "n = " << n;
  }
}

TEST(QPoly, RoutesAgreeThrough40) {
  for (std::size_t n = 0; n <= 40; ++n) EXPECT_TRUE(poly_checks::q_routes_agree(n)) << n;
}

TEST(QPoly, Palindromic) {
  for (std::size_t n = 0; n <= 40; ++n) EXPECT_TRUE(poly_checks::q_palindromic(n)) << n;
}

TEST(QPoly, OddClosedForm) {
  for (std::size_t m = 1; m <= 15; ++m) EXPECT_TRUE(poly_checks::q_odd_closed_form(m)) << m;
}

TEST(QPoly, SummationIdentities) {
  for (std::size_t n = 0; n <= 30; ++n) {
    EXPECT_TRUE(poly_checks::sum_identity1(n)) << n;
    EXPECT_TRUE(poly_checks::sum_identity2(n)) << n;
  }
  for (std::size_t n = 0; n <= 20; ++n) {
    EXPECT_TRUE(poly_checks::sum_identity3(n)) << n;
    EXPECT_TRUE(poly_checks::sum_identity4(n)) << n;
  }
}

TEST(QPoly, GeneratingFunction) { EXPECT_TRUE(poly_checks::generating_function_check(20)); }

TEST(QPoly, DetectsBrokenIdentity) {
  // Sanity check that the comparisons are not vacuous.
  EXPECT_NE(q_poly(4), q_poly(4).reflected() + RationalPolynomial{Rational(1)});
  EXPECT_THROW(RationalPolynomial({Rational(1), Rational(2)}).divided_by_x(), consistency_error);
}

TEST(PPoly, SpecExamples) {
  EXPECT_EQ(p_poly(1), BivariatePolynomial::from_inner(poly({"1"})));
  // P_2 = z - 2(tau + 1)
  EXPECT_EQ(p_poly(2), (BivariatePolynomial{poly({"-2", "-2"}), poly({"1"})}));
  // P_3 = z^2 - (15(tau+1) z - 10(tau^2+3tau+1))/6
  EXPECT_EQ(p_poly_recursive(3),
            (BivariatePolynomial{poly({"5/3", "5", "5/3"}), poly({"-5/2", "-5/2"}), poly({"1"})}));
  // P_4 = z^3 - (6(tau+1) z^2 - 5(tau^2+3tau+1) z + 10 tau(tau+1))/2
  EXPECT_EQ(p_poly(4), (BivariatePolynomial{poly({"0", "-5", "-5"}), poly({"5/2", "15/2", "5/2"}),
                                            poly({"-3", "-3"}), poly({"1"})}));
  // P_5 = z^4 - (42(tau+1) z^3 - 42(tau^2+3tau+1) z^2 + 105 tau(tau+1) z + 14(tau^4-5tau^2+1))/12
  const BivariatePolynomial p5{poly({"-7/6", "0", "35/6", "0", "-7/6"}), poly({"0", "-35/4", "-35/4"}),
                               poly({"7/2", "21/2", "7/2"}), poly({"-7/2", "-7/2"}), poly({"1"})};
  EXPECT_EQ(p_poly_recursive(5), p5);
  EXPECT_EQ(p_poly_alt(2), p_poly(2));
  EXPECT_THROW(p_poly(0), domain_error);
}

TEST(PPoly, RoutesAgreeThrough25) {
  for (std::size_t n = 1; n <= 25; ++n) EXPECT_TRUE(poly_checks::p_routes_agree(n)) << n;
}

TEST(PPoly, ScalingAndMonic) {
  for (std::size_t n = 1; n <= 20; ++n) {
    EXPECT_TRUE(poly_checks::p_scaling(n)) << n;
    EXPECT_TRUE(poly_checks::p_monic(n)) << n;
  }
}

TEST(PPoly, GeneratingFunctionNumerically) {
  // sum_n P_n u^n/(n+2)! = tau (e^{uz}-1-uz-u^2z^2/2) / (z^3 (e^u-1)(e^{tau u}-1))
  const std::complex<double> z(0.7, -0.3), tau(1.3, 0.4);
  const double u = 0.05;
  std::complex<double> lhs = 0;
  double fact = 2;
  for (std::size_t n = 1; n <= 14; ++n) {
    fact *= double(n + 2);
    lhs += p_poly(n).eval(z, tau) * std::pow(u, double(n)) / fact;
  }
  const auto e = [](std::complex<double> w) { return std::exp(w) - 1.0; };
  const auto uz = u * z;
  const auto rhs = tau * (e(uz) - uz - uz * uz / 2.0) / (z * z * z * e(std::complex<double>(u)) * e(tau * u));
  EXPECT_LT(std::abs(lhs - rhs), 1e-10 * std::abs(rhs));
}

TEST(Eval, HornerExamples) {
  EXPECT_EQ(eval_rational_poly(q_poly(0), std::complex<double>(3, 4)), std::complex<double>(1));
  EXPECT_NEAR(std::abs(eval_rational_poly(q_poly(2), std::complex<double>(1)) - 5.0 / 6), 0, 4e-16);
  EXPECT_EQ(eval_rational_poly(bernoulli_polynomial(1), std::complex<double>(0.5)), std::complex<double>(0));
  EXPECT_EQ(eval_bivariate(p_poly(1), std::complex<double>(2, 1), std::complex<double>(5)), std::complex<double>(1));
  EXPECT_EQ(eval_bivariate(p_poly(2), std::complex<double>(2), std::complex<double>(0)), std::complex<double>(0));
  // P_5(1; 1) = 1 - (42*2 - 42*5 + 105*2 + 14*(-3))/12
  const double p5 = 1.0 - (84.0 - 210.0 + 210.0 - 42.0) / 12.0;
  EXPECT_NEAR(std::abs(eval_bivariate(p_poly(5), std::complex<double>(1), std::complex<double>(1)) - p5), 0, 1e-14);
}

TEST(Memo, ConcurrentReaders) {
  std::vector<std::thread> threads;
  std::vector<RationalPolynomial> results(8);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([t, &results] { results[t] = q_poly(30 + t % 3); });
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) EXPECT_EQ(results[t], q_poly_recursive(30 + t % 3));
}
