#pragma once

#include <stdexcept>
#include <string>

namespace annulus {

/// Argument outside the annulus (radius or point not in the working domain).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Requested truncation tolerance cannot be certified within the j-cap.
class truncation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A stated precondition of an operation does not hold for the inputs.
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Smallness hypothesis of a logarithmic bound is not satisfied.
/// Carries both sides of the log-space comparison so callers can report them.
class hypothesis_error : public std::runtime_error {
public:
  hypothesis_error(double log_norm, double threshold_exponent)
      : std::runtime_error("hypothesis not satisfied: log norm " +
                           std::to_string(log_norm) + " >= threshold exponent " +
                           std::to_string(threshold_exponent)),
        log_norm_(log_norm), threshold_exponent_(threshold_exponent) {}

  double log_norm() const { return log_norm_; }
  double threshold_exponent() const { return threshold_exponent_; }

private:
  double log_norm_;
  double threshold_exponent_;
};

/// Function has a zero on (or numerically indistinguishable from) the boundary.
class boundary_zero_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Arc covers too few grid nodes for quadrature.
class arc_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Linear system unexpectedly singular or solve did not verify.
class solver_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Inner trace vanishes somewhere; the Robin quotient is undefined there.
class vanishing_trace_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File output failed.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace annulus
