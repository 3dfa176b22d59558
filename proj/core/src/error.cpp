#include "crgs/error.hpp"

namespace crgs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyDatabase: return "EmptyDatabase";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::PatternLengthMismatch: return "PatternLengthMismatch";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::InvalidMinSup: return "InvalidMinSup";
    case ErrorCode::InvalidDelta: return "InvalidDelta";
    case ErrorCode::UndefinedDistance: return "UndefinedDistance";
    case ErrorCode::NotSubsequence: return "NotSubsequence";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace crgs
