#pragma once

#include <span>

#include "tensoralg/core.hpp"

namespace tensoralg {

/// Sign of the permutation spelled by a 1-based index tuple: 0 if any entry
/// repeats, otherwise (-1)^(number of inversions). Entries must lie in
/// 1..dim.
int permutation_sign(std::span<const int> idx, int dim);

enum class KroneckerKind { LowerLower, UpperUpper, Mixed };

/// δ_{rs}, δ^{rs} or δ^r_s (Mixed is laid out as slots [Up, Down]).
TensorObject kronecker(int dim, KroneckerKind kind);

enum class LeviCivitaVariance { AllUp, AllDown };

/// Rank-`dim` permutation-sign symbol. AllDown carries weight -1 and AllUp
/// weight +1.
TensorObject levi_civita_symbol(int dim, LeviCivitaVariance variance);

}  // namespace tensoralg
