#pragma once

#include <stdexcept>
#include <string>

namespace hypchain {

// Malformed chain description: inconsistent dimensions, bad matrices.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A rank/stability assumption required by the design does not hold.
struct AssumptionError : std::runtime_error {
  explicit AssumptionError(const std::string& what) : std::runtime_error(what) {}
};

// A trace lookup fell outside the stored window.
struct WindowError : std::runtime_error {
  explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was requested before its required history exists.
struct StartupError : std::runtime_error {
  explicit StartupError(const std::string& what) : std::runtime_error(what) {}
};

// The explicit scheme produced NaN/overflow.
struct DivergenceError : std::runtime_error {
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver failed to converge within its cap.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Matrix inversion on a (numerically) singular matrix.
struct SingularityError : std::runtime_error {
  explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid experiment configuration.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypchain
