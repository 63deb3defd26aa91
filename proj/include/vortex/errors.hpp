#pragma once

#include <stdexcept>
#include <string>

namespace vortex {

/// Right-hand side of the Poisson solve has a grid mean beyond tolerance.
struct MeanNotZeroError : std::runtime_error {
  explicit MeanNotZeroError(const std::string& what) : std::runtime_error(what) {}
};

/// Contraction margin of the midpoint fixed-point map is not positive.
struct NonContractiveError : std::runtime_error {
  explicit NonContractiveError(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed-point iteration hit its cap with residual above tolerance.
struct NoConvergenceError : std::runtime_error {
  explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A scheme step had to be abandoned; carries the step index.
struct StepRejectedError : std::runtime_error {
  StepRejectedError(int step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + " rejected: " + what),
        step_index(step) {}
  int step_index;
};

/// Reference solver detected sup-norm blow-up (under-resolution guard).
struct BlowUpError : std::runtime_error {
  explicit BlowUpError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid or inconsistent user configuration.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vortex
