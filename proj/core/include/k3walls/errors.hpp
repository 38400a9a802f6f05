#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3walls {

enum class ErrorCode {
  kInvalidArgument,
  kOverflow,
  kIllDefinedSlope,
  kProportionalClasses,
  kNotRankZero,
  kNonPrimitive,
  kOutOfRange,
  kBadVector,
  kDegenerateCharge,
};

std::string_view error_code_name(ErrorCode code);

/// Domain error raised by every k3walls operation. The code identifies the
/// failed precondition; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace k3walls
