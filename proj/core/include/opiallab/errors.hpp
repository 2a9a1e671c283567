// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace opiallab {

/// Argument outside the mathematical domain of an operation (p < 1, x <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition on the input function failed, e.g. u(0) != 0
/// for the Opial check or a nonzero mean for the mean-zero check.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numerical method did not reach its tolerance within budget.
/// Carries the best estimate available when it gave up.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

/// The boundary value solver could not produce an admissible solution.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace opiallab
