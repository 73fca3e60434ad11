#pragma once

#include <stdexcept>
#include <string>

namespace unicrit {

// Every failure the library signals carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& detail) : Error("invalid_argument", detail) {}
};

// Raised when a construction would exceed the configured degree cap.
struct ResourceCapExceeded : Error {
  explicit ResourceCapExceeded(const std::string& detail) : Error("resource_cap", detail) {}
};

// A computation that must be exact left a remainder.
struct InconsistencyError : Error {
  explicit InconsistencyError(const std::string& detail) : Error("inconsistency", detail) {}
};

// The dynatomic polynomial at the requested parameter has repeated roots.
struct ParabolicCollision : Error {
  explicit ParabolicCollision(const std::string& detail) : Error("parabolic_collision", detail) {}
};

struct NewtonDivergence : Error {
  explicit NewtonDivergence(const std::string& detail) : Error("newton_divergence", detail) {}
};

struct PrecisionExhausted : Error {
  explicit PrecisionExhausted(const std::string& detail) : Error("precision_exhausted", detail) {}
};

struct NonConvergence : Error {
  explicit NonConvergence(const std::string& detail) : Error("nonconvergence", detail) {}
};

}  // namespace unicrit
