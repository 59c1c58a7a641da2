#include "compgraph/error.hpp"

namespace compgraph {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kMalformedInput: return "MalformedInput";
    case ErrorKind::kEdgeOrderViolation: return "EdgeOrderViolation";
    case ErrorKind::kColorOutOfRange: return "ColorOutOfRange";
    case ErrorKind::kPathConditionViolation: return "PathConditionViolation";
    case ErrorKind::kCycleDetected: return "CycleDetected";
    case ErrorKind::kNotLinearExtension: return "NotLinearExtension";
    case ErrorKind::kCapabilityLimit: return "CapabilityLimit";
    case ErrorKind::kConstructionDegenerate: return "ConstructionDegenerate";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> vertex)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      vertex_(vertex) {}

}  // namespace compgraph
