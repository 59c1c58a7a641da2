#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace compgraph {

enum class ErrorKind {
  kMalformedInput,
  kEdgeOrderViolation,
  kColorOutOfRange,
  kPathConditionViolation,
  kCycleDetected,
  kNotLinearExtension,
  kCapabilityLimit,
  kConstructionDegenerate,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library. `vertex()` carries the offending
// 1-indexed vertex when the error is about one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> vertex = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> vertex() const noexcept { return vertex_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> vertex_;
};

}  // namespace compgraph
