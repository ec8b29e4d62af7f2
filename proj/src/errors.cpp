#include "gjs/errors.hpp"

namespace gjs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::UnsupportedDiscriminant: return "UnsupportedDiscriminant";
    case ErrorCode::NoRealFixedPoint: return "NoRealFixedPoint";
    case ErrorCode::OverflowDiverged: return "OverflowDiverged";
    case ErrorCode::InvalidVacuum: return "InvalidVacuum";
    case ErrorCode::OutsideInvertibleRegion: return "OutsideInvertibleRegion";
    case ErrorCode::NegativeNormSquared: return "NegativeNormSquared";
    case ErrorCode::FixedPointVacuum: return "FixedPointVacuum";
    case ErrorCode::NegativeLadderSquare: return "NegativeLadderSquare";
    case ErrorCode::DescentViolation: return "DescentViolation";
    case ErrorCode::CutResidualTooLarge: return "CutResidualTooLarge";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::DegenerateGaussNumber: return "DegenerateGaussNumber";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PairingMismatch: return "PairingMismatch";
    case ErrorCode::OutOfBasis: return "OutOfBasis";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), index_(index) {}

}  // namespace gjs
