#pragma once

#include "tensoralg/core.hpp"

namespace tensoralg {

/// Dimension up to which determinant() sums the permutation-sign
/// contraction directly; above it LU elimination is used.
inline constexpr int kEpsilonDeterminantMaxDim = 4;

/// det x^r_s for an object with slots [Up, Down]; the upper index is the
/// matrix row. The weight is ignored.
double determinant(const TensorObject& t);

/// Same value computed by LU elimination with partial pivoting, for any
/// dimension.
double determinant_by_elimination(const TensorObject& t);

/// Determinant of the component matrix of any rank-2 object (slot 0 is the
/// row). Used for det g_{rs} and det x^{rs}.
double component_determinant(const TensorObject& t);

/// True when |det| <= 1e-12 * (max |entry|)^dim.
bool is_singular(const TensorObject& t);

/// Inverse of a rank-(1,1) object: u^r_m t^m_s = δ^r_s. Throws
/// SingularError when the object is singular.
TensorObject inverse(const TensorObject& t);

/// z^r_s = x^r_m y^m_s
TensorObject matmul(const TensorObject& x, const TensorObject& y);

}  // namespace tensoralg
