// barnes: evaluate, tabulate and verify the Barnes double gamma function.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 capacity or non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "barnes/barnes.hpp"
#include "barnes/json_io.hpp"
#include "barnes/parse.hpp"

namespace {

using barnes::Complex;
using nlohmann::json;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3 };

struct Config {
  std::string format = "json";
  std::string out;
  std::optional<long> N;
  std::optional<int> M;
  std::optional<long> m;
  std::uint64_t seed = 0;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) { row_strings(header); }
  Csv& cell(double x) { return text(fmt(x)); }
  Csv& cell(long x) { return text(std::to_string(x)); }
  Csv& cell(Complex<double> z) { return cell(z.real()).cell(z.imag()); }
  Csv& text(const std::string& s) {
    if (!fresh_) os_ << ',';
    os_ << s;
    fresh_ = false;
    return *this;
  }
  void end() {
    os_ << '\n';
    fresh_ = true;
  }
  std::string str() const { return os_.str(); }

 private:
  void row_strings(const std::vector<std::string>& v) {
    for (const auto& s : v) text(s);
    end();
  }
  std::ostringstream os_;
  bool fresh_ = true;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw barnes::domain_error("cannot open output file '" + cfg.out + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit(const Config& cfg, const json& j, const Csv& csv) {
  emit(cfg, cfg.format == "csv" ? csv.str() : j.dump(2));
}

barnes::ComputeParams make_params(const Config& cfg, Complex<double> z, Complex<double> tau) {
  barnes::ComputeParams p;
  if (cfg.N || cfg.M) {
    if (!cfg.N) p = barnes::choose_params(z, tau, p.target);
    p.auto_select = false;
    if (cfg.N) p.N = *cfg.N;
    if (cfg.M) p.M = *cfg.M;
  }
  if (cfg.m) p.m_cd = *cfg.m;
  return p;
}

// One evaluation row; lattice zeros give value 0 and an infinite log.
struct Point {
  Complex<double> z;
  barnes::EvalResult<double> r;
  std::optional<std::pair<long, long>> zero;
};

Point evaluate(const Config& cfg, Complex<double> z, Complex<double> tau) {
  barnes::require_tau_off_cut(tau, "eval");
  Point pt{z, {}, barnes::find_lattice_zero(z, tau)};
  if (pt.zero) {
    pt.r.log_value = {-std::numeric_limits<double>::infinity(), 0};
    pt.r.value = 0;
    pt.r.params_used = make_params(cfg, z, tau);
    return pt;
  }
  pt.r = barnes::log_double_gamma(z, tau, make_params(cfg, z, tau));
  return pt;
}

json point_json(const Point& pt) {
  json j = barnes::json_io::eval_result(pt.r);
  j["z"] = barnes::json_io::complex(pt.z);
  if (pt.zero) {
    std::ostringstream os;
    os << "lattice zero: z = -" << pt.zero->first << " tau - " << pt.zero->second;
    j["note"] = os.str();
  }
  return j;
}

const std::vector<std::string> kPointHeader = {"z_re",   "z_im",   "value_re", "value_im", "log_re",
                                               "log_im", "err_est", "N",       "M",        "m"};

void point_csv(Csv& csv, const Point& pt) {
  csv.cell(pt.z).cell(pt.r.value).cell(pt.r.log_value).cell(pt.r.error_estimate);
  csv.cell(pt.r.params_used.N).cell(long(pt.r.params_used.M)).cell(pt.r.params_used.m_cd).end();
}

int cmd_eval(const Config& cfg, const std::string& zs, const std::string& ts) {
  const Complex<double> tau = barnes::parse_complex(ts);
  const Point pt = evaluate(cfg, barnes::parse_complex(zs), tau);
  json j = point_json(pt);
  j["tau"] = barnes::json_io::complex(tau);
  Csv csv(kPointHeader);
  point_csv(csv, pt);
  emit(cfg, j, csv);
  if (pt.zero && cfg.format == "csv") std::cerr << j["note"].get<std::string>() << '\n';
  return kOk;
}

int cmd_table(const Config& cfg, const std::string& grid, const std::string& ts) {
  const Complex<double> tau = barnes::parse_complex(ts);
  json rows = json::array();
  Csv csv(kPointHeader);
  for (Complex<double> z : barnes::parse_grid(grid)) {
    const Point pt = evaluate(cfg, z, tau);
    rows.push_back(point_json(pt));
    point_csv(csv, pt);
  }
  emit(cfg, json{{"tau", barnes::json_io::complex(tau)}, {"rows", rows}}, csv);
  return kOk;
}

int cmd_polys(const Config& cfg, const std::string& family, long n_max) {
  if (n_max < 0 || n_max > 200) throw barnes::domain_error("polys: n must be in 0..200");
  json j = json::object();
  Csv csv({"name", "z_power", "tau_power", "coeff"});
  for (long n = 0; n <= n_max; ++n) {
    const std::string name = family + std::to_string(n);
    if (family == "q") {
      const auto p = barnes::q_poly(static_cast<std::size_t>(n));
      j[name] = barnes::json_io::polynomial(p);
      const auto& c = p.coefficients();
      for (std::size_t k = 0; k < c.size(); ++k) csv.text(name).cell(0L).cell(long(k)).text(c[k].str()).end();
    } else {
      if (n == 0) continue;
      const auto p = barnes::p_poly(static_cast<std::size_t>(n));
      j[name] = barnes::json_io::polynomial(p);
      const auto& outer = p.coefficients();
      for (std::size_t a = 0; a < outer.size(); ++a) {
        const auto& c = outer[a].coefficients();
        for (std::size_t k = 0; k < c.size(); ++k) csv.text(name).cell(long(a)).cell(long(k)).text(c[k].str()).end();
      }
    }
  }
  emit(cfg, j, csv);
  return kOk;
}

int cmd_modular_forms(const Config& cfg, const std::string& ts) {
  const Complex<double> tau = barnes::parse_complex(ts);
  const auto f = cfg.m ? barnes::modular_forms_em(tau, *cfg.m) : barnes::modular_forms_em(tau);
  Csv csv({"name", "re", "im"});
  for (auto [name, v] : std::vector<std::pair<std::string, Complex<double>>>{
           {"tau", f.tau}, {"C", f.C}, {"D", f.D}, {"a", f.a}, {"b", f.b}, {"a_tilde", f.a_tilde},
           {"b_tilde", f.b_tilde}})
    csv.text(name).cell(v).end();
  csv.text("m").cell(double(f.m_used)).cell(0.0).end();
  csv.text("err_est").cell(f.error_estimate).cell(0.0).end();
  emit(cfg, barnes::json_io::modular_forms(f), csv);
  return kOk;
}

int cmd_verify(const Config& cfg, const std::string& profile) {
  const auto reports = barnes::run_suite(cfg.seed, profile);
  Csv csv({"id", "passed", "max_residual", "tolerance", "samples"});
  for (const auto& r : reports)
    csv.text(r.id).text(r.passed ? "true" : "false").cell(r.max_residual).cell(r.tolerance)
        .cell(long(r.samples.size())).end();
  emit(cfg, barnes::json_io::identity_reports(reports), csv);
  for (const auto& r : reports)
    if (!r.passed) std::cerr << "FAILED " << r.id << " max residual " << fmt(r.max_residual) << '\n';
  return barnes::all_passed(reports) ? kOk : kVerifyFailed;
}

int cmd_bench(const Config& cfg, const std::string& mode, const std::string& zs, const std::string& ts) {
  const Complex<double> z = barnes::parse_complex(zs), tau = barnes::parse_complex(ts);
  if (mode == "order-N") {
    const std::vector<int> Ms = {2, 4, 6};
    const std::vector<long> Ns = {32, 64, 128, 256};
    const auto rows = barnes::order_n_study(z, tau, Ms, Ns);
    const double floor = barnes::order_floor(std::abs(barnes::log_double_gamma(z, tau).log_value));
    json jr = json::array(), js = json::object();
    Csv csv({"N", "M", "error"});
    for (const auto& r : rows) {
      jr.push_back({{"N", r.N}, {"M", r.M}, {"error", r.error}});
      csv.cell(r.N).cell(long(r.M)).cell(r.error).end();
    }
    for (int M : Ms) {
      std::vector<double> x, y;
      for (const auto& r : rows)
        if (r.M == M) x.push_back(double(r.N)), y.push_back(r.error);
      const double s = barnes::loglog_slope(x, y, floor);
      js[std::to_string(M)] = barnes::json_io::number(s);
      csv.text("slope").cell(long(M)).cell(s).end();
    }
    emit(cfg, json{{"rows", jr}, {"slopes", js}, {"floor", floor}}, csv);
  } else if (mode == "order-asym") {
    const std::vector<double> radii = {20, 40, 80, 160};
    const std::vector<int> tails = {0, 1, 2, 4, 8};
    const auto rows = barnes::asymptotic_study(tau, std::arg(z), radii, tails);
    json jr = json::array(), js = json::object();
    Csv csv({"radius", "n_tail", "error"});
    for (const auto& r : rows) {
      jr.push_back({{"radius", r.radius}, {"n_tail", r.n_tail}, {"error", r.error}});
      csv.cell(r.radius).cell(long(r.n_tail)).cell(r.error).end();
    }
    for (int n : tails) {
      std::vector<double> x, y;
      for (const auto& r : rows)
        if (r.n_tail == n) x.push_back(r.radius), y.push_back(r.error);
      const double s = barnes::loglog_slope(x, y, 1e-13);
      js[std::to_string(n)] = barnes::json_io::number(s);
      csv.text("slope").cell(long(n)).cell(s).end();
    }
    emit(cfg, json{{"rows", jr}, {"slopes", js}}, csv);
  } else if (mode == "timing") {
    const auto rows = barnes::timing_study(z, tau, {256, 1024, 4096, 16384, 65536});
    json jr = json::array();
    Csv csv({"N", "seconds"});
    for (const auto& r : rows) {
      jr.push_back({{"N", r.N}, {"seconds", r.seconds}});
      csv.cell(r.N).cell(r.seconds).end();
    }
    emit(cfg, json{{"rows", jr}}, csv);
  } else {
    throw barnes::domain_error("bench: mode must be order-N, order-asym or timing");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barnes double gamma function G(z; tau)"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_option("--N", cfg.N, "Product truncation N (disables automatic selection)")->check(CLI::PositiveNumber);
  app.add_option("--M", cfg.M, "Correction order M, 1..16 (disables automatic selection)")
      ->check(CLI::Range(1, barnes::kMaxCorrectionOrder));
  app.add_option("--m", cfg.m, "Euler-Maclaurin length for C and D")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for verify");

  std::string z = "1", tau = "1", grid, family = "q", profile = "default", mode = "order-N";
  long n_max = 10;

  auto* eval = app.add_subcommand("eval", "Evaluate G(z; tau) and its canonical log");
  eval->add_option("--z", z, "Argument, e.g. 1.5-0.2i")->required();
  eval->add_option("--tau", tau, "Period ratio tau, off (-inf, 0]")->required();

  auto* table = app.add_subcommand("table", "Tabulate G on a grid start:stop:count");
  table->add_option("--z", grid, "Grid start:stop:count, endpoints complex")->required();
  table->add_option("--tau", tau, "Period ratio tau")->required();

  auto* polys = app.add_subcommand("polys", "Exact q_n or P_n coefficients");
  polys->add_option("--family", family, "q or P")->check(CLI::IsMember({"q", "P"}));
  polys->add_option("--n", n_max, "Largest index, at most 200");

  auto* mf = app.add_subcommand("modular-forms", "C, D, a, b and the shifted constants at tau");
  mf->add_option("--tau", tau, "Period ratio tau")->required();

  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->add_option("--profile", profile, "Tolerance profile")->check(CLI::IsMember({"default", "strict"}));

  auto* bench = app.add_subcommand("bench", "Convergence and timing studies");
  bench->add_option("--mode", mode, "order-N, order-asym or timing")
      ->check(CLI::IsMember({"order-N", "order-asym", "timing"}));
  bench->add_option("--z", z, "Argument (order-N, timing) or ray direction (order-asym)");
  bench->add_option("--tau", tau, "Period ratio tau");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(cfg, z, tau);
    if (*table) return cmd_table(cfg, grid, tau);
    if (*polys) return cmd_polys(cfg, family, n_max);
    if (*mf) return cmd_modular_forms(cfg, tau);
    if (*verify) return cmd_verify(cfg, profile);
    if (*bench) {
      if (bench->count("--z") == 0) z = mode == "order-N" ? "2+1i" : "1";
      if (bench->count("--tau") == 0) tau = mode == "order-asym" ? "1+1i" : "1.4142135623730951";
      return cmd_bench(cfg, mode, z, tau);
    }
  } catch (const barnes::capacity_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const barnes::convergence_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const barnes::consistency_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const barnes::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
