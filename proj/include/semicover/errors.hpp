#pragma once

#include "semicover/element.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semicover {

enum class ErrorCode {
  MalformedTable,
  NotAGroup,
  InvalidElement,
  InvalidHomomorphism,
  BallTooLarge,
  NotASubgroup,
  NotNormal,
  ModelMismatch,
  UnsupportedCone,
  NotACone,
  TrivialQuotient,
  MatrixTooLarge,
  ParseError,
  NotNormalized,
  NotACover,
  LemmaViolation,
  IdentityOnlyH,
  NothingToRefine,
  ClosureViolation,
  DepthExceeded,
  GroupTooLarge,
  UnknownSuite,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this type. Errors that come from
/// a failed check carry the offending elements so the failure can be replayed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Element> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Element> witness_;
};

}  // namespace semicover
