#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "k3walls/errors.hpp"

namespace k3walls::detail {

__extension__ using Wide = __int128;

inline std::int64_t narrow(Wide value, const char* what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kOverflow, std::string("integer overflow in ") + what);
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace k3walls::detail
