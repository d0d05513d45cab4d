#include "proofinfo/error.hpp"

namespace proofinfo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyFormula: return "EmptyFormula";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::NoGoalInProof: return "NoGoalInProof";
    case ErrorCode::MultipleGoalsInProof: return "MultipleGoalsInProof";
    case ErrorCode::DuplicateProofBody: return "DuplicateProofBody";
    case ErrorCode::DuplicateProofId: return "DuplicateProofId";
    case ErrorCode::UncoveredGoal: return "UncoveredGoal";
    case ErrorCode::UnknownGoal: return "UnknownGoal";
    case ErrorCode::UnknownProofId: return "UnknownProofId";
    case ErrorCode::NotADistribution: return "NotADistribution";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::ProofTooLarge: return "ProofTooLarge";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::UnparsableFormula: return "UnparsableFormula";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InconsistentDayContext: return "InconsistentDayContext";
    case ErrorCode::MalformedWorld: return "MalformedWorld";
    case ErrorCode::NotUserData: return "NotUserData";
  }
  return "Unknown";
}

}  // namespace proofinfo
