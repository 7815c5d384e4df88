#include "liaison/error.hpp"

namespace liaison {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NegativeHeight: return "NegativeHeight";
    case ErrorCode::EtaNegative: return "EtaNegative";
    case ErrorCode::EtaDisconnectedBelow: return "EtaDisconnectedBelow";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::NotIdealMode: return "NotIdealMode";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InadmissibleDegree: return "InadmissibleDegree";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MinorTooLarge: return "MinorTooLarge";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace liaison
