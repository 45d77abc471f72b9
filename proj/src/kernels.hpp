#pragma once

// Slot-wise matrix application shared by frames and metric.

#include <cstddef>
#include <span>
#include <vector>

#include "tensoralg/execution.hpp"

namespace tensoralg::detail {

/// Replaces slot `slot` of a dense component array by Σ_s M(i, s) x[..s..],
/// where M(i, s) = m[i][s] or, with `transposed`, m[s][i].
std::vector<double> apply_to_slot(std::span<const double> src, int dim,
                                  std::size_t rank, std::size_t slot,
                                  std::span<const double> m, bool transposed,
                                  Execution exec);

}  // namespace tensoralg::detail
