#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace higherk {

enum class ErrorCode {
  NotAdmissible,
  MalformedRelation,
  MalformedQuiver,
  InvalidRepresentation,
  AlgebraMismatch,
  NotAbsolutelyIndecomposable,
  ZeroModule,
  EnumerationBudgetExceeded,
  IncompleteList,
  ResolutionOverrun,
  NotUnimodular,
  WellDefinednessFailure,
  ProjectiveInput,
  NotBasic,
  NotExact,
  DegenerateDraw,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// All library failures surface as this exception; the code identifies the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace higherk
