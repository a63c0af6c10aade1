#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratmaps {

/// Failure categories shared by every module.
enum class ErrorCode {
  // coefficients
  DivisionByZero,
  FieldMismatch,
  NotPrime,
  ZeroPolynomial,
  // polyring
  NotDivisible,
  RingMismatch,
  AllZero,
  ZeroMap,
  IndeterminateForm,
  // homog
  ZeroTuple,
  DivisibleByY2,
  NotHomogeneous,
  WitnessRejected,
  NotPrimitive,
  LinearFactorPresent,
  BothZero,
  // subfield
  CharPUnsupported,
  NotPrimitivePair,
  ConstantRatio,
  NotCoprime,
  BothConstant,
  ConstantP,
  ZeroDenominator,
  AllConstant,
  // integrality
  ConstantPart,
  DegenerateImage,
  // gordan_noether
  NotSquare,
  ZeroScalar,
  IndeterminateComposition,
  TrdegTooLarge,
  DegreeOrder,
  PreconditionNotVerified,
  // cli
  SyntaxError,
  UnknownVariable,
  // generic
  InvalidArgument,
  /// A computed fact contradicts a theorem the library relies on.
  InternalAlarm,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace ratmaps
