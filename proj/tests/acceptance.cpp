// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "barnes/barnes.hpp"

using namespace barnes;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

double rel(cd a, cd b) { return std::abs(a - b) / std::abs(b); }

double mod_residual(cd a, cd b) {
  const cd d = a - b;
  return std::abs(detail::expm1(cd(d.real(), std::remainder(d.imag(), 2 * pi))));
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Outcome published_experiment() {
  const cd tau(std::sqrt(3.0));
  ComputeParams p;
  p.auto_select = false;
  p.N = 1000;
  p.M = 10;
  p.m_cd = 1000;
  double slowest = 0;
  auto timed = [&](cd z) {
    const auto t0 = std::chrono::steady_clock::now();
    const cd v = log_double_gamma(z, tau, p).value;
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return v;
  };
  const double e1 = std::abs(timed(cd(1)) - 1.0);
  const double e2 = rel(timed(tau), cd(1.4889283353650864545337314811487));
  return {e1 <= 1e-12 && e2 <= 5e-13 && slowest <= 2,
          "|G(1)-1| = " + sci(e1) + ", rel err G(sqrt3) = " + sci(e2) + ", slowest eval " + sci(slowest) + " s"};
}

Outcome closed_form_at_tau() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> r(0, 1.5), th(-pi, pi);
  double worst = 0;
  for (int k = 0; k < 20;) {
    const cd tau = 2.0 + std::polar(r(rng), th(rng));
    if (std::abs(tau) < 0.05) continue;
    ++k;
    const cd expected = std::pow(cd(2 * pi), (tau - 1.0) / 2.0) * std::pow(tau, -0.5);
    worst = std::max(worst, rel(double_gamma_value(tau, tau), expected));
  }
  return {worst <= 1e-9, "max rel err over 20 tau = " + sci(worst)};
}

Outcome exact_polynomials() {
  std::ifstream in(std::string(BARNES_TEST_DATA) + "/q_polynomials.json");
  if (!in) return {false, "reference table missing"};
  const auto doc = nlohmann::json::parse(in);
  int table = 0;
  bool ok = true;
  for (const auto& entry : doc["polynomials"]) {
    const Rational scale = Rational::parse(entry["scale"].get<std::string>());
    std::vector<Rational> c;
    for (const auto& v : entry["coeffs"]) c.push_back(Rational(v.get<long>()) * scale);
    ok = ok && q_poly(entry["n"].get<std::size_t>()) == RationalPolynomial(c);
    ++table;
  }
  ok = ok && table == 22;
  for (std::size_t n = 0; n <= 40; ++n) ok = ok && poly_checks::q_routes_agree(n) && poly_checks::q_palindromic(n);
  for (std::size_t n = 1; n <= 25; ++n)
    ok = ok && poly_checks::p_routes_agree(n) && poly_checks::p_scaling(n) && poly_checks::p_monic(n);
  for (std::size_t n = 0; n <= 20; ++n)
    ok = ok && poly_checks::sum_identity1(n) && poly_checks::sum_identity2(n) && poly_checks::sum_identity3(n) &&
         poly_checks::sum_identity4(n);
  for (std::size_t m = 1; m <= 10; ++m) ok = ok && poly_checks::q_odd_closed_form(m);
  ok = ok && poly_checks::generating_function_check(30);
  return {ok, std::to_string(table) + " table entries, routes n<=40 / n<=25, summation identities n<=20, exact"};
}

Outcome convergence_order() {
  const cd z(2, 1), tau(std::sqrt(2.0));
  const auto rows = order_n_study(z, tau, {2, 4, 6}, {32, 64, 128, 256});
  const double floor = order_floor(std::abs(log_double_gamma(z, tau).log_value));
  bool ok = true;
  std::ostringstream os;
  os << "slopes";
  for (int M : {2, 4, 6}) {
    std::vector<double> x, y;
    for (const auto& r : rows)
      if (r.M == M) x.push_back(double(r.N)), y.push_back(r.error);
    const double s = loglog_slope(x, y, floor);
    ok = ok && s <= -(M + 0.8);
    os << " M=" << M << ": " << s;
  }
  return {ok, os.str()};
}

Outcome asymptotic_agreement() {
  bool ok = true;
  std::ostringstream os;
  for (double theta : {0.0, pi / 4}) {
    const auto rows = asymptotic_study(cd(1, 1), theta, {10, 20, 40}, {8});
    ok = ok && rows[2].error <= 1e-8 && rows[1].error < rows[0].error && rows[2].error < rows[1].error;
    os << "arg " << theta << ": |z|=10,20,40 -> " << sci(rows[0].error) << ", " << sci(rows[1].error) << ", "
       << sci(rows[2].error) << "; ";
  }
  return {ok, os.str()};
}

Outcome identity_suite() {
  const auto reports = run_suite(0, "default");
  std::string failed;
  for (const auto& r : reports)
    if (!r.passed) failed += " " + r.id;
  return {failed.empty(), std::to_string(reports.size()) + " reports" + (failed.empty() ? ", all passed" : "; failed:" + failed)};
}

Outcome modular_form_routes() {
  double worst_c = 0, worst_d_int = 0, worst_d_diff = 0;
  for (cd tau : {cd(1), cd(2), cd(std::sqrt(3.0)), cd(1, 1)}) {
    const auto f = modular_forms_em(tau);
    const cd ci = C_via_integral(tau), di = D_via_integral(tau);
    const cd cg = C_via_logG_derivative(tau), dg = D_via_logG_derivative(tau);
    worst_c = std::max({worst_c, std::abs(f.C - ci), std::abs(f.C - cg), std::abs(ci - cg)});
    worst_d_int = std::max(worst_d_int, std::abs(f.D - di));
    worst_d_diff = std::max({worst_d_diff, std::abs(f.D - dg), std::abs(di - dg)});
  }
  return {worst_c <= 1e-7 && worst_d_int <= 1e-7 && worst_d_diff <= 1e-6,
          "C spread " + sci(worst_c) + ", D (EM vs integral) " + sci(worst_d_int) + ", D (derivative) " +
              sci(worst_d_diff)};
}

Outcome constant_term_at_one() {
  const double expected = 1.0 / 12 - std::log(1.282427129) - 0.5 * std::log(2 * pi);
  const double err = std::abs(b0_of_tau(cd(1)) - expected);
  return {err <= 1e-7, "|b0(1) - (1/12 - ln A - ln(2pi)/2)| = " + sci(err)};
}

Outcome integral_oracle() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> re(0.1, 3), im(-1.5, 1.5);
  double worst = 0;
  for (int k = 0; k < 10; ++k) {
    const cd z(re(rng), im(rng)), tau(re(rng), im(rng));
    worst = std::max(worst, mod_residual(log_G_via_integral(z, tau), log_double_gamma(z, tau).log_value));
  }
  return {worst <= 1e-9, "max rel diff over 10 points = " + sci(worst)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "published experiment at tau = sqrt3", 4, published_experiment},
      {2, "closed form G(tau; tau)", 10, closed_form_at_tau},
      {3, "exact polynomial suite", 5, exact_polynomials},
      {4, "product-length convergence order", 30, convergence_order},
      {5, "large-z expansion agreement", 20, asymptotic_agreement},
      {6, "identity suite, seed 0", 180, identity_suite},
      {7, "modular-form route agreement", 60, modular_form_routes},
      {8, "b0(1) and the Glaisher-Kinkelin constant", 60, constant_term_at_one},
      {9, "integral representation oracle", 60, integral_oracle},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.ok && secs <= c.budget_seconds;
    if (!ok) ++failures;
    std::printf("criterion %d: %s - %s (%s; %.2f s of %.0f s)\n", c.id, ok ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs, c.budget_seconds);
  }
  return failures == 0 ? 0 : 1;
}
