#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdym {

enum class ErrorCode {
  DivisionBySingularValue,
  LogOfZero,
  BaseOffRealSlice,
  OrderTooHigh,
  IncompatibleJets,
  SingularDecomposition,
  NotUnimodular,
  DegreeBudgetExceeded,
  TauSingular,
  NonPositiveScale,
  SingularOnPath,
  SingularTransform,
  NotPRSInput,
  NotRadiallySymmetric,
  TailNotConverged,
  MalformedSeed,
  NegativeArgument,
  UnsupportedSeed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI) can map it to a diagnostic without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sdym
