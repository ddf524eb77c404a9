#include "povm_robust/error.hpp"

namespace povm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare:
      return "NotSquare";
    case ErrorCode::NotHermitian:
      return "NotHermitian";
    case ErrorCode::NotFinite:
      return "NotFinite";
    case ErrorCode::NotPsd:
      return "NotPsd";
    case ErrorCode::CompletenessViolation:
      return "CompletenessViolation";
    case ErrorCode::InvalidDistribution:
      return "InvalidDistribution";
    case ErrorCode::NotOrthonormal:
      return "NotOrthonormal";
    case ErrorCode::SizeMismatch:
      return "SizeMismatch";
    case ErrorCode::EtaOutOfRange:
      return "EtaOutOfRange";
    case ErrorCode::InvalidPovm:
      return "InvalidPovm";
    case ErrorCode::DimensionOne:
      return "DimensionOne";
    case ErrorCode::ShapeMismatch:
      return "ShapeMismatch";
    case ErrorCode::InvalidEnsemble:
      return "InvalidEnsemble";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::InvalidJoint:
      return "InvalidJoint";
    case ErrorCode::InvalidGroup:
      return "InvalidGroup";
    case ErrorCode::Unbounded:
      return "Unbounded";
    case ErrorCode::Infeasible:
      return "Infeasible";
    case ErrorCode::IterationLimit:
      return "IterationLimit";
    case ErrorCode::InfeasibleSubspace:
      return "InfeasibleSubspace";
    case ErrorCode::SolverFailure:
      return "SolverFailure";
    case ErrorCode::WitnessSearchExhausted:
      return "WitnessSearchExhausted";
    case ErrorCode::UsageError:
      return "UsageError";
    case ErrorCode::ParseError:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace povm
