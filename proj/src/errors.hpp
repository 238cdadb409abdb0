#pragma once

#include <stdexcept>
#include <string>

namespace idealkit {

enum class ErrorCode {
  kInvalidArgument,
  kMixedFields,
  kDivisionByZero,
  kMixedRings,
  kZeroPolynomial,
  kZeroDivisorInput,
  kResourceLimit,
  kInexactDivision,
  kZeroIdeal,
  kDimensionMismatch,
  kUnknownBound,
  kInvalidParameters,
  kComparisonOverflow,
  kInfeasibleEnumeration,
  kConstantInput,
  kImproperIdeal,
  kNotAlgebraic,
  kNonMonicModulus,
  kCandidateExhaustion,
  kParseError,
  kUnknownVariable,
  kBadFieldDescriptor,
  kInvariantViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::kParseError, message + " at line " + std::to_string(line) + ", column " +
                                          std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void check_invariant(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvariantViolation, what);
}

}  // namespace idealkit
