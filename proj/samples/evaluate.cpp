// Evaluate G(z; tau), check it against the functional equation and the
// large-z expansion, and print the modular constants it is built from.

#include <cmath>
#include <complex>
#include <cstdio>

#include "barnes/barnes.hpp"

int main() {
  using C = std::complex<double>;
  const C tau(std::sqrt(3.0), 0);

  const auto g = barnes::log_double_gamma(tau, tau);
  std::printf("G(sqrt3; sqrt3) = %.16f   (N = %ld, M = %d, err ~ %.1e)\n", g.value.real(), g.params_used.N,
              g.params_used.M, g.error_estimate);

  const C z(0.7, 0.4);
  const auto [r1, r2] = barnes::check_functional_equations(z, tau);
  std::printf("functional equations at z = 0.7+0.4i: residuals %.1e, %.1e\n", r1, r2);

  const C big(40, 10);
  const C engine = barnes::log_double_gamma(big, tau).log_value;
  const C asym = barnes::log_double_gamma_asymptotic(big, tau, 8);
  std::printf("large z = 40+10i: |exp(engine - expansion) - 1| = %.1e\n",
              std::abs(std::exp(engine - asym) - 1.0));

  const auto f = barnes::modular_forms_em(tau);
  std::printf("C(tau) = %.15f, D(tau) = %.15f\n", f.C.real(), f.D.real());
  std::printf("b0(tau) = %.15f\n", barnes::b0_of_tau(tau).real());
  std::printf("G(0; tau) = %g (lattice zero)\n", std::abs(barnes::double_gamma_value(C(0), tau)));
}
