#include "gfm/error.hpp"

namespace gfm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NegativeNodeWeight: return "NegativeNodeWeight";
    case ErrorKind::AllZeroNodeWeights: return "AllZeroNodeWeights";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::TooManyVertices: return "TooManyVertices";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::Overshoot: return "Overshoot";
    case ErrorKind::ResolutionTooFine: return "ResolutionTooFine";
    case ErrorKind::NonPositiveResolution: return "NonPositiveResolution";
    case ErrorKind::ScheduleInvalid: return "ScheduleInvalid";
    case ErrorKind::ZeroDiameter: return "ZeroDiameter";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::InvalidReplicationCount: return "InvalidReplicationCount";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CacheFormat: return "CacheFormat";
    case ErrorKind::InfeasibleDegree: return "InfeasibleDegree";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace gfm
