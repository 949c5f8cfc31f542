#include "csg/error.hpp"

namespace csg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonPointedCone: return "NonPointedCone";
    case ErrorKind::SingularRays: return "SingularRays";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotASemigroup: return "NotASemigroup";
    case ErrorKind::GapBoundExceeded: return "GapBoundExceeded";
    case ErrorKind::NonSimplicialCone: return "NonSimplicialCone";
    case ErrorKind::NotACSemigroup: return "NotACSemigroup";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::ZeroShift: return "ZeroShift";
    case ErrorKind::NoGaps: return "NoGaps";
    case ErrorKind::NotAnExtremalRay: return "NotAnExtremalRay";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InvalidGluingData: return "InvalidGluingData";
    case ErrorKind::InvalidExtensionData: return "InvalidExtensionData";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotFullCone: return "NotFullCone";
    case ErrorKind::NotAnAntichain: return "NotAnAntichain";
    case ErrorKind::NotOversemigroup: return "NotOversemigroup";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::vector<std::int64_t>> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

void fail(ErrorKind kind, const std::string& message,
          std::vector<std::vector<std::int64_t>> witness) {
  throw Error(kind, message, std::move(witness));
}

}  // namespace csg
