#pragma once

// JSON encoding of the library's value types (nlohmann::json).  Complex
// numbers are {"re": x, "im": y}; rationals are "num/den" strings; bivariate
// polynomials are z-major arrays of tau-coefficient arrays.  Every to_json has
// a matching parser, and doubles are written in shortest round-trip form.

#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "barnes/asymptotics.hpp"
#include "barnes/double_gamma.hpp"
#include "barnes/identities.hpp"
#include "barnes/modular_forms.hpp"
#include "barnes/polynomial.hpp"
#include "barnes/rational.hpp"

namespace barnes::json_io {

using json = nlohmann::json;

/// Non-finite doubles have no JSON literal; they become null and read back as +inf.
inline json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
inline double parse_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

inline json complex(Complex<double> z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }
inline Complex<double> parse_complex(const json& j) { return {parse_number(j.at("re")), parse_number(j.at("im"))}; }

inline json polynomial(const RationalPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  return a;
}
inline RationalPolynomial parse_polynomial(const json& j) {
  std::vector<Rational> c;
  for (const auto& s : j) c.push_back(Rational::parse(s.get<std::string>()));
  return RationalPolynomial(std::move(c));
}

inline json polynomial(const BivariatePolynomial& p) {
  json a = json::array();
  for (const auto& inner : p.coefficients()) a.push_back(polynomial(inner));
  return a;
}
inline BivariatePolynomial parse_bivariate(const json& j) {
  std::vector<RationalPolynomial> c;
  for (const auto& inner : j) c.push_back(parse_polynomial(inner));
  return BivariatePolynomial(std::move(c));
}

inline json eval_result(const EvalResult<double>& r) {
  return {{"log", complex(r.log_value)},
          {"value", complex(r.value)},
          {"err_est", number(r.error_estimate)},
          {"N", r.params_used.N},
          {"M", r.params_used.M},
          {"m", r.params_used.m_cd},
          {"warnings", r.warnings}};
}
inline EvalResult<double> parse_eval_result(const json& j) {
  EvalResult<double> r;
  r.log_value = parse_complex(j.at("log"));
  r.value = parse_complex(j.at("value"));
  r.error_estimate = parse_number(j.at("err_est"));
  r.params_used.N = j.at("N").get<long>();
  r.params_used.M = j.at("M").get<int>();
  r.params_used.m_cd = j.value("m", 0L);
  r.params_used.auto_select = false;
  if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

inline json modular_forms(const ModularForms<double>& f) {
  return {{"tau", complex(f.tau)},       {"m", f.m_used},
          {"C", complex(f.C)},           {"D", complex(f.D)},
          {"a", complex(f.a)},           {"b", complex(f.b)},
          {"a_tilde", complex(f.a_tilde)}, {"b_tilde", complex(f.b_tilde)},
          {"err_est", number(f.error_estimate)}};
}
inline ModularForms<double> parse_modular_forms(const json& j) {
  ModularForms<double> f;
  f.tau = parse_complex(j.at("tau"));
  f.m_used = j.at("m").get<long>();
  f.C = parse_complex(j.at("C"));
  f.D = parse_complex(j.at("D"));
  f.a = parse_complex(j.at("a"));
  f.b = parse_complex(j.at("b"));
  f.a_tilde = parse_complex(j.at("a_tilde"));
  f.b_tilde = parse_complex(j.at("b_tilde"));
  f.error_estimate = parse_number(j.at("err_est"));
  return f;
}

inline json asymptotic_coeffs(const AsymptoticCoeffs<double>& c) {
  json tail = json::array();
  for (std::size_t n = 1; n < c.tail.size(); ++n) tail.push_back(complex(c.tail[n]));
  return {{"a0", complex(c.a0)}, {"a1", complex(c.a1)}, {"a2", complex(c.a2)}, {"b0", complex(c.b0)},
          {"b1", complex(c.b1)}, {"b2", complex(c.b2)}, {"tail", tail}};
}
inline AsymptoticCoeffs<double> parse_asymptotic_coeffs(const json& j) {
  AsymptoticCoeffs<double> c;
  c.a0 = parse_complex(j.at("a0"));
  c.a1 = parse_complex(j.at("a1"));
  c.a2 = parse_complex(j.at("a2"));
  c.b0 = parse_complex(j.at("b0"));
  c.b1 = parse_complex(j.at("b1"));
  c.b2 = parse_complex(j.at("b2"));
  c.tail.assign(1, Complex<double>(0));
  for (const auto& t : j.at("tail")) c.tail.push_back(parse_complex(t));
  return c;
}

inline json identity_report(const IdentityReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) {
    json e = {{"z", complex(s.z)}, {"tau", complex(s.tau)}};
    if (s.p > 0) e["p"] = s.p;
    if (s.q > 0) e["q"] = s.q;
    samples.push_back(e);
  }
  json residuals = json::array();
  for (double x : r.residuals) residuals.push_back(number(x));
  return {{"id", r.id},
          {"samples", samples},
          {"residuals", residuals},
          {"max_residual", number(r.max_residual)},
          {"tolerance", number(r.tolerance)},
          {"passed", r.passed},
          {"notes", r.notes}};
}
inline IdentityReport parse_identity_report(const json& j) {
  IdentityReport r;
  r.id = j.at("id").get<std::string>();
  for (const auto& e : j.at("samples"))
    r.samples.push_back({parse_complex(e.at("z")), parse_complex(e.at("tau")), e.value("p", 0), e.value("q", 0)});
  for (const auto& x : j.at("residuals")) r.residuals.push_back(parse_number(x));
  r.max_residual = parse_number(j.at("max_residual"));
  r.tolerance = parse_number(j.at("tolerance"));
  r.passed = j.at("passed").get<bool>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

inline json identity_reports(const std::vector<IdentityReport>& reports) {
  json a = json::array();
  for (const auto& r : reports) a.push_back(identity_report(r));
  return a;
}

}  // namespace barnes::json_io
