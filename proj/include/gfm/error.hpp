#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfm {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  NonPositiveLength,
  Disconnected,
  NegativeNodeWeight,
  AllZeroNodeWeights,
  EmptyGraph,
  UnknownVertex,
  TooManyVertices,
  DimensionMismatch,
  SameVertex,
  Overshoot,
  ResolutionTooFine,
  NonPositiveResolution,
  ScheduleInvalid,
  ZeroDiameter,
  UnknownPreset,
  InvalidReplicationCount,
  ParseError,
  CacheFormat,
  InfeasibleDegree,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure surfaced by the library carries a kind so callers (and the
// CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gfm
