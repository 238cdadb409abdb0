#include "errors.hpp"

namespace idealkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMixedFields: return "MixedFields";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kMixedRings: return "MixedRings";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kZeroDivisorInput: return "ZeroDivisorInput";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kInexactDivision: return "InexactDivision";
    case ErrorCode::kZeroIdeal: return "ZeroIdeal";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kUnknownBound: return "UnknownBound";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kComparisonOverflow: return "ComparisonOverflow";
    case ErrorCode::kInfeasibleEnumeration: return "InfeasibleEnumeration";
    case ErrorCode::kConstantInput: return "ConstantInput";
    case ErrorCode::kImproperIdeal: return "ImproperIdeal";
    case ErrorCode::kNotAlgebraic: return "NotAlgebraic";
    case ErrorCode::kNonMonicModulus: return "NonMonicModulus";
    case ErrorCode::kCandidateExhaustion: return "CandidateExhaustion";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kBadFieldDescriptor: return "BadFieldDescriptor";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace idealkit
