#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bergq {

// Stable error codes. The numeric values are part of the CLI contract and
// must not be reordered.
enum class ErrorCode : int {
  FieldMismatch = 10,
  DivisionByZero = 11,
  UnassignedVariable = 12,
  InvalidField = 13,
  SyntaxError = 20,
  UnknownGenerator = 21,
  UnknownVariable = 22,
  ShapeMismatch = 30,
  InvalidSize = 31,
  CharacteristicTooSmall = 32,
  NotCommuting = 33,
  RepeatedEigenvalue = 40,
  NonzeroDiagonalRHS = 41,
  NotDiagonalLeadingTerm = 42,
  ScalarInput = 50,
  InvalidTensor = 60,
  InvalidReport = 61,
  Usage = 70,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace bergq
