#pragma once

#include <stdexcept>
#include <string>

namespace symres {

// Structured error codes surfaced by the library. The CLI maps
// InputError -> exit 1, CheckFailed -> exit 2, InternalLift -> exit 3.
enum class ErrorCode {
  UnknownVariable,
  SyntaxError,
  DivisionNotExact,
  FieldMismatch,
  IncompatibleModule,
  NotInImage,
  LengthExceeded,
  NotFiniteOverS,
  NotAnAlgebra,
  NotGorenstein,
  OddCodimRequired,
  TNotInvertible,
  NoTwistExists,
  ShapeMismatch,
  MiddleMapNotSymmetric,
  DualNotExact,
  NotSkew,
  DegreesInconsistent,
  AveragedMapNotInvertible,
  LiftFailed,
  NotNullHomotopic,
  InvalidArgument,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, long index = -1)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        index_(index) {}

  ErrorCode code() const { return code_; }
  // Byte offset for parse errors, column index for NotInImage, else -1.
  long index() const { return index_; }

 private:
  ErrorCode code_;
  long index_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg, long index = -1) {
  throw Error(code, msg, index);
}

}  // namespace symres
