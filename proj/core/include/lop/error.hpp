#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lop {

enum class ErrorCode {
  InvalidArgument,
  NTooLarge,
  NOutOfRange,
  SizeMismatch,
  SingularGram,
  NotInvariant,
  AffineMismatch,
  FiberMismatch,
  ValueMismatch,
  DimTooLarge,
  ClaimViolation,
  NotValid,
};

/// Upper-case identifier of the error code, e.g. "N_TOO_LARGE".
std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. what() reads "<CODE>: <message>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lop
