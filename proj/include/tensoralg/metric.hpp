#pragma once

#include <span>

#include "tensoralg/core.hpp"
#include "tensoralg/symbols.hpp"

namespace tensoralg {

/// Symmetric positive-definite g_{rs} with its inverse g^{rs} and
/// determinant g = det g_{rs} cached at construction.
class Metric {
 public:
  /// Validates symmetry (1e-12, relative to the largest entry) and positive
  /// definiteness (leading principal minors > 1e-12). Throws MetricError.
  static Metric from_tensor(const TensorObject& g);
  static Metric orthonormal(int dim);

  int dim() const noexcept { return g_.dim(); }
  /// Slots [Down, Down].
  const TensorObject& g() const noexcept { return g_; }
  /// Slots [Up, Up].
  const TensorObject& g_inv() const noexcept { return g_inv_; }
  double det_g() const noexcept { return det_g_; }

 private:
  Metric(TensorObject g, TensorObject g_inv, double det_g);

  TensorObject g_;
  TensorObject g_inv_;
  double det_g_;
};

/// g_{rs} = e_r · e_s for basis vectors given in orthonormal reference
/// coordinates (Up objects). Dependent vectors fail positive definiteness.
Metric metric_from_basis(std::span<const TensorObject> basis);

/// x_r = g_{rs} x^s applied to one Up slot.
TensorObject lower(const TensorObject& t, std::size_t slot, const Metric& m);
/// x^r = g^{rs} x_s applied to one Down slot.
TensorObject raise(const TensorObject& t, std::size_t slot, const Metric& m);

/// g_{rs} x^r y^s for two contravariant vectors.
double inner(const TensorObject& x, const TensorObject& y, const Metric& m);
/// g^{rs} a_r b_s for two covariant vectors.
double inner_covariant(const TensorObject& a, const TensorObject& b,
                       const Metric& m);

/// ε_{rst} = √g e_{rst} (AllDown) or ε^{rst} = e^{rst}/√g (AllUp); weight 0.
/// Dimension 3 only.
TensorObject levi_civita_tensor(const Metric& m, LeviCivitaVariance variance);

/// z^r = ε^{rmn} g_{ms} g_{nt} x^s y^t (dimension 3).
TensorObject cross(const TensorObject& x, const TensorObject& y,
                   const Metric& m);

/// ε^{mnp} g_{mr} g_{ns} g_{pt} x^r y^s z^t (dimension 3).
double triple(const TensorObject& x, const TensorObject& y,
              const TensorObject& z, const Metric& m);

}  // namespace tensoralg
