#include "ratmaps/error.hpp"

namespace ratmaps {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::ZeroMap: return "ZeroMap";
    case ErrorCode::IndeterminateForm: return "IndeterminateForm";
    case ErrorCode::ZeroTuple: return "ZeroTuple";
    case ErrorCode::DivisibleByY2: return "DivisibleByY2";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::WitnessRejected: return "WitnessRejected";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::LinearFactorPresent: return "LinearFactorPresent";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::CharPUnsupported: return "CharPUnsupported";
    case ErrorCode::NotPrimitivePair: return "NotPrimitivePair";
    case ErrorCode::ConstantRatio: return "ConstantRatio";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BothConstant: return "BothConstant";
    case ErrorCode::ConstantP: return "ConstantP";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::AllConstant: return "AllConstant";
    case ErrorCode::ConstantPart: return "ConstantPart";
    case ErrorCode::DegenerateImage: return "DegenerateImage";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::IndeterminateComposition: return "IndeterminateComposition";
    case ErrorCode::TrdegTooLarge: return "TrdegTooLarge";
    case ErrorCode::DegreeOrder: return "DegreeOrder";
    case ErrorCode::PreconditionNotVerified: return "PreconditionNotVerified";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalAlarm: return "InternalAlarm";
  }
  return "Unknown";
}

}  // namespace ratmaps
