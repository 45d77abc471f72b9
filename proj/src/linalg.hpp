#pragma once

// Small dense square-matrix routines on row-major storage. Row index is
// the upper index of a rank-(1,1) object.

#include <span>
#include <vector>

namespace tensoralg::detail {

/// Σ over permutations of sign(p) Π_k m[p_k][k]: the permutation-sign
/// contraction applied column by column.
double det_by_permutation_sign(std::span<const double> m, int d);

/// LU with partial pivoting.
double det_by_elimination(std::span<const double> m, int d);

/// Inverse via LU with partial pivoting. Caller checks singularity.
std::vector<double> lu_inverse(std::span<const double> m, int d);

std::vector<double> matmul(std::span<const double> a,
                           std::span<const double> b, int d);

/// |det| <= 1e-12 * (max |entry|)^d
bool is_singular(double det, std::span<const double> m, int d);

}  // namespace tensoralg::detail
