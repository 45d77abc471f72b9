#include "tensoralg/symbols.hpp"

#include <string>
#include <vector>

namespace tensoralg {

int permutation_sign(std::span<const int> idx, int dim) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > dim) {
      throw AddressingError("permutation entry " + std::to_string(idx[k]) +
                            " outside 1.." + std::to_string(dim));
    }
  }
  int inversions = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

TensorObject kronecker(int dim, KroneckerKind kind) {
  std::vector<Variance> slots;
  switch (kind) {
    case KroneckerKind::LowerLower:
      slots = {Variance::Down, Variance::Down};
      break;
    case KroneckerKind::UpperUpper:
      slots = {Variance::Up, Variance::Up};
      break;
    case KroneckerKind::Mixed:
      slots = {Variance::Up, Variance::Down};
      break;
  }
  return TensorObject::generate(dim, std::move(slots), 0,
                                [](const MultiIndex& i) {
                                  return i[0] == i[1] ? 1.0 : 0.0;
                                });
}

TensorObject levi_civita_symbol(int dim, LeviCivitaVariance variance) {
  const bool up = variance == LeviCivitaVariance::AllUp;
  std::vector<Variance> slots(static_cast<std::size_t>(dim),
                              up ? Variance::Up : Variance::Down);
  return TensorObject::generate(
      dim, std::move(slots), up ? 1 : -1, [dim](const MultiIndex& i) {
        return static_cast<double>(permutation_sign(i, dim));
      });
}

}  // namespace tensoralg
