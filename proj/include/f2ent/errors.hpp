#pragma once

#include <stdexcept>
#include <string>

namespace f2ent {

/// Invalid or inconsistent run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerically unsafe propagation parameters; the run is refused rather than
/// silently producing garbage (CLI exit code 3).
struct StabilityError : std::runtime_error {
  explicit StabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace f2ent
