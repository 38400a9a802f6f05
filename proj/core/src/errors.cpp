#include "k3walls/errors.hpp"

namespace k3walls {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kOverflow:
      return "Overflow";
    case ErrorCode::kIllDefinedSlope:
      return "IllDefinedSlope";
    case ErrorCode::kProportionalClasses:
      return "ProportionalClasses";
    case ErrorCode::kNotRankZero:
      return "NotRankZero";
    case ErrorCode::kNonPrimitive:
      return "NonPrimitive";
    case ErrorCode::kOutOfRange:
      return "OutOfRange";
    case ErrorCode::kBadVector:
      return "BadVector";
    case ErrorCode::kDegenerateCharge:
      return "DegenerateCharge";
  }
  return "Unknown";
}

}  // namespace k3walls
