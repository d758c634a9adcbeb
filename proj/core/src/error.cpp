#include "lop/error.hpp"

namespace lop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::NTooLarge: return "N_TOO_LARGE";
    case ErrorCode::NOutOfRange: return "N_OUT_OF_RANGE";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::SingularGram: return "SINGULAR_GRAM";
    case ErrorCode::NotInvariant: return "NOT_INVARIANT";
    case ErrorCode::AffineMismatch: return "AFFINE_MISMATCH";
    case ErrorCode::FiberMismatch: return "FIBER_MISMATCH";
    case ErrorCode::ValueMismatch: return "VALUE_MISMATCH";
    case ErrorCode::DimTooLarge: return "DIM_TOO_LARGE";
    case ErrorCode::ClaimViolation: return "CLAIM_VIOLATION";
    case ErrorCode::NotValid: return "NOT_VALID";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace lop
