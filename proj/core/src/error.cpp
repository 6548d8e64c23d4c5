#include "invform/error.hpp"

namespace invform {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DegreeLimit: return "DegreeLimit";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NotSelfDual: return "NotSelfDual";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::NotEvenPolynomial: return "NotEvenPolynomial";
    case ErrorKind::SmallCharacteristic: return "SmallCharacteristic";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::NotDualPair: return "NotDualPair";
    case ErrorKind::EigenvalueObstruction: return "EigenvalueObstruction";
    case ErrorKind::DecisionFalse: return "DecisionFalse";
    case ErrorKind::NotUnipotentType: return "NotUnipotentType";
    case ErrorKind::NotUnipotent: return "NotUnipotent";
    case ErrorKind::UnverifiedForm: return "UnverifiedForm";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::RationalsUnsupported: return "RationalsUnsupported";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace invform
