#pragma once

#include <stdexcept>
#include <string>

namespace bcsee {

/// Model parameter outside its physical domain (negative gap, nonpositive
/// Debye or Fermi energy, DOS queried outside its support, ...).
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed caller input: unsorted or empty grids, bad table files, bad
/// command-line values.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard capacity limit (oracle mode count).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Numerical procedure failed to reach its target. Carries the best partial
/// estimate available when the failure was detected.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double partial_value, double partial_error);

  double partial_value() const noexcept { return partial_value_; }
  double partial_error() const noexcept { return partial_error_; }

 private:
  double partial_value_;
  double partial_error_;
};

}  // namespace bcsee
