#pragma once

#include <array>

#include "tensoralg/core.hpp"

namespace tensoralg::minkowski {

/// (x^0, x^1, x^2, x^3) with x^0 = ct in length units.
using FourVector = std::array<double, 4>;

/// Row-major 4×4 matrix; m[r][s] = c^r_s.
using Matrix4 = std::array<std::array<double, 4>, 4>;

inline constexpr double kLorentzTolerance = 1e-9;

/// x^0 y^0 - x^1 y^1 - x^2 y^2 - x^3 y^3
double mink_product(const FourVector& x, const FourVector& y) noexcept;

/// Componentwise condition c^0_s c^0_r - Σ_k c^k_s c^k_r = η_{sr} for every
/// pair (s, r), within `tolerance`.
bool is_lorentz(const Matrix4& c, double tolerance = kLorentzTolerance) noexcept;

/// Matrix form Cᵀ η C = η, evaluated with explicit matrix products.
bool preserves_eta(const Matrix4& c, double tolerance = kLorentzTolerance) noexcept;

/// Hyperbolic rotation angle ψ.
struct Rapidity {
  double psi = 0.0;
};

/// A transition matrix between Galilean frames.
class LorentzMatrix {
 public:
  /// Throws ConventionError when `c` fails is_lorentz.
  static LorentzMatrix from_matrix(const Matrix4& c);
  static LorentzMatrix identity() noexcept;

  const Matrix4& matrix() const noexcept { return m_; }
  double operator()(int row, int col) const noexcept {
    return m_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }

  /// x̄^r = c^r_s x^s
  FourVector apply(const FourVector& x) const noexcept;

  /// `this` after `first`: C = this · first.
  LorentzMatrix after(const LorentzMatrix& first) const noexcept;

  /// dim 4, slots [Up, Down].
  TensorObject to_tensor() const;

 private:
  explicit LorentzMatrix(const Matrix4& m) noexcept : m_(m) {}
  friend LorentzMatrix boost(double beta);
  friend LorentzMatrix boost_from_rapidity(Rapidity psi);

  Matrix4 m_;
};

/// Boost along x^1 with β = v/c: diagonal 1/√(1-β²), off-diagonal
/// -β/√(1-β²) in the (0,1) block. Throws SuperluminalError for |β| >= 1.
LorentzMatrix boost(double beta);

/// ψ with sh ψ = β/√(1-β²) and ch ψ = 1/√(1-β²), i.e. ψ = artanh β.
Rapidity rapidity(double beta);

/// (ch ψ, sh ψ; sh ψ, ch ψ) in the (0,1) block. boost(β) equals
/// boost_from_rapidity({-rapidity(β).psi}).
LorentzMatrix boost_from_rapidity(Rapidity psi);

Matrix4 multiply(const Matrix4& a, const Matrix4& b) noexcept;

}  // namespace tensoralg::minkowski
