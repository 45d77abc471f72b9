#pragma once

#include <cstdio>
#include <string>

namespace tensoralg::detail {

/// printf-style %.*g rendering.
inline std::string format_number(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

}  // namespace tensoralg::detail
