#include "sdym/errors.hpp"

namespace sdym {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionBySingularValue: return "DivisionBySingularValue";
    case ErrorCode::LogOfZero: return "LogOfZero";
    case ErrorCode::BaseOffRealSlice: return "BaseOffRealSlice";
    case ErrorCode::OrderTooHigh: return "OrderTooHigh";
    case ErrorCode::IncompatibleJets: return "IncompatibleJets";
    case ErrorCode::SingularDecomposition: return "SingularDecomposition";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case ErrorCode::TauSingular: return "TauSingular";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::SingularOnPath: return "SingularOnPath";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::NotPRSInput: return "NotPRSInput";
    case ErrorCode::NotRadiallySymmetric: return "NotRadiallySymmetric";
    case ErrorCode::TailNotConverged: return "TailNotConverged";
    case ErrorCode::MalformedSeed: return "MalformedSeed";
    case ErrorCode::NegativeArgument: return "NegativeArgument";
    case ErrorCode::UnsupportedSeed: return "UnsupportedSeed";
  }
  return "Unknown";
}

}  // namespace sdym
