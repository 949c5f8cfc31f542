#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csg {

enum class ErrorKind {
  DimensionMismatch,
  NonPointedCone,
  SingularRays,
  InvalidInput,
  NotASemigroup,
  GapBoundExceeded,
  NonSimplicialCone,
  NotACSemigroup,
  NotInSemigroup,
  ZeroShift,
  NoGaps,
  NotAnExtremalRay,
  InternalInconsistency,
  InvalidGluingData,
  InvalidExtensionData,
  InvalidParameter,
  NotFullCone,
  NotAnAntichain,
  NotOversemigroup,
  ArithmeticOverflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library. `witness` carries the lattice points
// that demonstrate the failure (e.g. the triple a + b = g for NotASemigroup).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::vector<std::int64_t>> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }
  const std::vector<std::vector<std::int64_t>>& witness() const noexcept {
    return witness_;
  }

 private:
  ErrorKind kind_;
  std::vector<std::vector<std::int64_t>> witness_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message,
                       std::vector<std::vector<std::int64_t>> witness = {});

}  // namespace csg
