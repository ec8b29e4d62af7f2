#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gjs {

enum class ErrorCode {
  InvalidArgument,
  NotQuadratic,
  UnsupportedDiscriminant,
  NoRealFixedPoint,
  OverflowDiverged,
  InvalidVacuum,
  OutsideInvertibleRegion,
  NegativeNormSquared,
  FixedPointVacuum,
  NegativeLadderSquare,
  DescentViolation,
  CutResidualTooLarge,
  NegativeRadicand,
  DegenerateGaussNumber,
  DimensionMismatch,
  PairingMismatch,
  OutOfBasis,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this one exception type; the
// optional index names the offending state / iteration where there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace gjs
