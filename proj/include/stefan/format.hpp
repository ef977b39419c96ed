#pragma once

#include <charconv>
#include <string>

namespace stefan {

/// Shortest decimal text that reads back to the same double.
inline std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace stefan
