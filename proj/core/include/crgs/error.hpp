#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crgs {

enum class ErrorCode {
  EmptyDatabase,
  InvalidParams,
  PatternLengthMismatch,
  OracleTooLarge,
  InvalidMinSup,
  InvalidDelta,
  UndefinedDistance,
  NotSubsequence,
  InvariantViolation,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; callers dispatch on
// code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace crgs
