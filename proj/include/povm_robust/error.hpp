#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace povm {

enum class ErrorCode {
  NotSquare,
  NotHermitian,
  NotFinite,
  NotPsd,
  CompletenessViolation,
  InvalidDistribution,
  NotOrthonormal,
  SizeMismatch,
  EtaOutOfRange,
  InvalidPovm,
  DimensionOne,
  ShapeMismatch,
  InvalidEnsemble,
  DimensionMismatch,
  InvalidJoint,
  InvalidGroup,
  Unbounded,
  Infeasible,
  IterationLimit,
  InfeasibleSubspace,
  SolverFailure,
  WitnessSearchExhausted,
  UsageError,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above, so
/// callers (and the CLI's error JSON) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace povm
