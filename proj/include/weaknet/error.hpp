#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weaknet {

enum class ErrorKind {
  ParseError,
  InvalidArgument,
  ZeroDirection,
  InvalidPolygon,
  NotSeparated,
  DegenerateOriginTriangle,
  EmptyB,
  NonDisjointBR,
  ZeroAlpha,
  ConvexityCheckFailed,
  BadEpsilon,
  TooManyAdversaryLines,
  NonpositiveRadius,
  EmptyFamily,
  HardeningFailed,
  DegeneratePlacement,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every recoverable failure in the library is reported as an Error; the kind
/// is stable and is what the CLI prints in its diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace weaknet
