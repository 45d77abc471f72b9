#pragma once

#include <cstddef>
#include <cstdint>

namespace tensoralg {

/// Selects the kernel flavor. Both produce bit-identical results: every
/// output cell is accumulated by one thread in a fixed order.
enum class Execution { Serial, Parallel };

namespace detail {

/// Below this many output cells the parallel path runs serially.
inline constexpr std::size_t kParallelThreshold = 2048;

/// Runs body(i) for i in [0, n).
template <typename Body>
void for_each_cell(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::Parallel && n >= kParallelThreshold) {
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      body(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      body(i);
    }
  }
}

}  // namespace detail
}  // namespace tensoralg
