#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "twf/types.hpp"

namespace twf {

/// Base class for all library errors. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes incompatible with the model/embedding/grid.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// User data or configuration violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed file content; message carries line/field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure; message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Non-finite state produced while integrating the flow.
class IntegrationBlowupError : public Error {
 public:
  using Error::Error;
};

/// Non-finite entries produced while propagating the linearized system.
class SensitivityBlowupError : public Error {
 public:
  using Error::Error;
};

/// Training loop failed to reach its target.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double final_residual)
      : Error(what), final_residual(final_residual) {}
  double final_residual = 0.0;
};

/// Projected gradient vanished while the new-point cost is above target.
class StalledDescentError : public NonConvergenceError {
 public:
  StalledDescentError(const std::string& what, double final_residual,
                      Index constraint_rank, Index expected_rank)
      : NonConvergenceError(what, final_residual),
        constraint_rank(constraint_rank),
        expected_rank(expected_rank) {}
  Index constraint_rank = 0;
  Index expected_rank = 0;
};

/// Newton restoration could not shrink the stacked residual below tolerance.
class RestorationFailureError : public NonConvergenceError {
 public:
  RestorationFailureError(const std::string& what,
                          std::vector<double> residual_history)
      : NonConvergenceError(what, residual_history.empty()
                                      ? 0.0
                                      : residual_history.back()),
        residual_history(std::move(residual_history)) {}
  std::vector<double> residual_history;
};

}  // namespace twf
