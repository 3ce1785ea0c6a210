#include "semicover/errors.hpp"

namespace semicover {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::InvalidHomomorphism: return "InvalidHomomorphism";
    case ErrorCode::BallTooLarge: return "BallTooLarge";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::UnsupportedCone: return "UnsupportedCone";
    case ErrorCode::NotACone: return "NotACone";
    case ErrorCode::TrivialQuotient: return "TrivialQuotient";
    case ErrorCode::MatrixTooLarge: return "MatrixTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::LemmaViolation: return "LemmaViolation";
    case ErrorCode::IdentityOnlyH: return "IdentityOnlyH";
    case ErrorCode::NothingToRefine: return "NothingToRefine";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<Element> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace semicover
