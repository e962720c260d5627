#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ipt {

enum class ErrorKind {
  RankDeficient,
  DimensionMismatch,
  DimensionTooLarge,
  NotFullDimensional,
  NotPointed,
  SingularMatrix,
  BoxOverflow,
  NotAnIndicator,
  NonGenericDirection,
  DegenerateSimplex,
  CoincidentPhases,
  InvalidPrecision,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::BoxOverflow: return "BoxOverflow";
    case ErrorKind::NotAnIndicator: return "NotAnIndicator";
    case ErrorKind::NonGenericDirection: return "NonGenericDirection";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::CoincidentPhases: return "CoincidentPhases";
    case ErrorKind::InvalidPrecision: return "InvalidPrecision";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Domain error raised by library operations. The kind is stable and is what
/// the CLI reports in its machine-readable error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ipt
