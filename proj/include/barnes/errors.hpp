#pragma once

#include <stdexcept>
#include <string>

namespace barnes {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (e.g. tau on (-inf, 0]).
class domain_error : public error {
 public:
  using error::error;
};

/// Argument sits on a pole of log-gamma / polygamma.
class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// z is (numerically) a zero of G(z; tau), so log G is undefined.
class lattice_zero_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A caller-side precondition failed (truncation too short, bad sector, ...).
class precondition_error : public error {
 public:
  using error::error;
};

/// Iterative procedure stopped before reaching its target.
class convergence_error : public error {
 public:
  using error::error;
};

/// A resource cap (N, n_max) would be exceeded.
class capacity_error : public error {
 public:
  using error::error;
};

/// Two exact construction routes disagree, or an exact division left a remainder.
class consistency_error : public error {
 public:
  using error::error;
};

}  // namespace barnes
