#pragma once

#include <json.hpp>

#include "moebius/integer.hpp"
#include "moebius/slope.hpp"

namespace moebius {

/// JSON number when the value fits in 64 bits, decimal string otherwise.
inline nlohmann::json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline nlohmann::json coords_json(const Coords& c) {
  return nlohmann::json::array({integer_json(c.longitude), integer_json(c.meridian)});
}

}  // namespace moebius
