#include "kernels.hpp"

#include "indexing.hpp"

namespace tensoralg::detail {

std::vector<double> apply_to_slot(std::span<const double> src, int dim,
                                  std::size_t rank, std::size_t slot,
                                  std::span<const double> m, bool transposed,
                                  Execution exec) {
  const auto st = strides(dim, rank);
  const std::size_t stride = st[slot];
  const auto d = static_cast<std::size_t>(dim);
  std::vector<double> out(src.size());
  for_each_cell(src.size(), exec, [&](std::size_t cell) {
    const std::size_t i = (cell / stride) % d;
    const std::size_t base = cell - i * stride;
    double sum = 0.0;
    for (std::size_t s = 0; s < d; ++s) {
      const double coeff = transposed ? m[s * d + i] : m[i * d + s];
      sum += coeff * src[base + s * stride];
    }
    out[cell] = sum;
  });
  return out;
}

}  // namespace tensoralg::detail
