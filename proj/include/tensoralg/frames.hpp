#pragma once

#include <span>
#include <vector>

#include "tensoralg/core.hpp"

namespace tensoralg {

/// Change of coordinates x̄^r = c^r_s x^s together with its inverse
/// x^r = γ^r_s x̄^s. Both matrices are rank-(1,1) objects with slots
/// [Up, Down]; the upper index is the row.
class Frame {
 public:
  static Frame identity(int dim);

  int dim() const noexcept { return c_.dim(); }
  const TensorObject& c() const noexcept { return c_; }
  const TensorObject& gamma() const noexcept { return gamma_; }
  double det_gamma() const noexcept { return det_gamma_; }

  /// The reverse change of coordinates (c and γ exchanged).
  Frame inverse() const;

 private:
  friend Frame frame_from_matrix(const TensorObject& c);
  friend Frame compose(const Frame& first, const Frame& second);

  Frame(TensorObject c, TensorObject gamma, double det_gamma);

  TensorObject c_;
  TensorObject gamma_;
  double det_gamma_;
};

/// Builds a frame from c^r_s. Throws SingularError when det c vanishes
/// (within the singular tolerance) or γ·c misses δ by more than 1e-9.
Frame frame_from_matrix(const TensorObject& c);

/// Apply `first`, then `second`: c = c2·c1, γ = γ1·γ2.
Frame compose(const Frame& first, const Frame& second);

/// (det γ)^weight by repeated multiplication or division.
double weight_factor(double det_gamma, int weight) noexcept;

/// Transformation law for pseudotensors: every Down slot is contracted with
/// γ, every Up slot with c, and the result is scaled by (det γ)^weight.
TensorObject transform(const TensorObject& t, const Frame& f,
                       Execution exec = Execution::Parallel);

/// New-frame basis ē_r = γ^s_r e_s. The input vectors are Up objects in
/// some reference coordinates; they must be linearly independent.
std::vector<TensorObject> transform_basis(const Frame& f,
                                          std::span<const TensorObject> basis);

/// Reverse of transform_basis: e_r = c^s_r ē_s.
std::vector<TensorObject> restore_basis(const Frame& f,
                                        std::span<const TensorObject> basis);

inline constexpr double kLawTolerance = 1e-9;

/// True iff `new_components` equals transform(old, f) under the given
/// weight and `old` is recovered from `new_components` by the reverse law
/// x = (det c)^M γ… c… x̄. Tolerance is relative to max(1, largest entry).
bool verify_transform_law(const TensorObject& old_components,
                          const TensorObject& new_components, const Frame& f,
                          int weight, double tolerance = kLawTolerance);

}  // namespace tensoralg
