#pragma once

#include <stdexcept>
#include <string>

namespace pellsurf {

// Stable error codes; the CLI prints them verbatim.
enum class ErrorCode {
  InvalidField,
  FieldMismatch,
  DivisionByZero,
  ZeroPolynomial,
  ParseError,
  InvalidArgument,
  OddDegree,
  NonSquareLeadingCoeff,
  InsufficientPrecision,
  PrecisionExhausted,
  ZeroSeries,
  EmptyExpansion,
  ConstantSubstitution,
  NotASolution,
  PreconditionViolated,
  NotPthPowerShape,
  SearchSpaceTooLarge,
  InconsistentState,
  OddDegreeOutOfScope,
  DegenerateFiber,
  IndeterminacyLocus,
  Inseparable,
  ReducibleCurve,
  OutOfRange,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pellsurf
