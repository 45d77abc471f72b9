#pragma once

// Internal layout helpers shared by the kernels.

#include <cstddef>
#include <span>
#include <vector>

namespace tensoralg::detail {

/// Row-major strides for `rank` slots of extent `dim` (slot 0 outermost).
inline std::vector<std::size_t> strides(int dim, std::size_t rank) {
  std::vector<std::size_t> s(rank, 1);
  for (std::size_t k = rank; k-- > 1;) {
    s[k - 1] = s[k] * static_cast<std::size_t>(dim);
  }
  return s;
}

/// Maps a flat offset in a layout of extent `dim` onto another layout:
/// digit k of `flat` (slot k of the source shape of length target.size())
/// is multiplied by target[k].
inline std::size_t remap(std::size_t flat, int dim,
                         std::span<const std::size_t> target) {
  std::size_t out = 0;
  const auto d = static_cast<std::size_t>(dim);
  for (std::size_t k = target.size(); k-- > 0;) {
    out += (flat % d) * target[k];
    flat /= d;
  }
  return out;
}

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace tensoralg::detail
