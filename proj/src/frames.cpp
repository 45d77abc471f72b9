#include "tensoralg/frames.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "format.hpp"
#include "kernels.hpp"
#include "linalg.hpp"
#include "tensoralg/determinants.hpp"
#include "tensoralg/symbols.hpp"

namespace tensoralg {

namespace {

constexpr double kInverseResidual = 1e-9;

void require_mixed_matrix(const TensorObject& m) {
  if (m.rank() != 2 || m.slots()[0] != Variance::Up ||
      m.slots()[1] != Variance::Down) {
    throw ShapeError("frame matrix must be rank (1,1) with slots [up,down], got " +
                     m.signature_string());
  }
}

double inverse_residual(const TensorObject& gamma, const TensorObject& c) {
  const auto prod = detail::matmul(gamma.components(), c.components(), c.dim());
  const auto n = static_cast<std::size_t>(c.dim());
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      const double expect = r == s ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(prod[r * n + s] - expect));
    }
  }
  return worst;
}

}  // namespace

Frame::Frame(TensorObject c, TensorObject gamma, double det_gamma)
    : c_(std::move(c)), gamma_(std::move(gamma)), det_gamma_(det_gamma) {}

Frame Frame::identity(int dim) {
  auto delta = kronecker(dim, KroneckerKind::Mixed);
  return Frame(delta, delta, 1.0);
}

Frame Frame::inverse() const { return Frame(gamma_, c_, 1.0 / det_gamma_); }

Frame frame_from_matrix(const TensorObject& c) {
  require_mixed_matrix(c);
  const double det_c = determinant(c);
  if (detail::is_singular(det_c, c.components(), c.dim())) {
    throw SingularError(
        "frame matrix is degenerate: the change of coordinates must be "
        "non-singular (|det c| = " +
            detail::format_number(std::abs(det_c)) + ")",
        std::abs(det_c));
  }
  auto c0 = c.with_weight(0);
  auto gamma = inverse(c0);
  const double residual = inverse_residual(gamma, c0);
  if (!(residual <= kInverseResidual)) {
    throw SingularError("frame matrix is too ill-conditioned: |γ·c - δ| = " +
                            detail::format_number(residual),
                        std::abs(det_c));
  }
  const double det_gamma = determinant(gamma);
  return Frame(std::move(c0), std::move(gamma), det_gamma);
}

Frame compose(const Frame& first, const Frame& second) {
  if (first.dim() != second.dim()) {
    throw ShapeError("cannot compose frames of dim " +
                     std::to_string(first.dim()) + " and " +
                     std::to_string(second.dim()));
  }
  auto c = matmul(second.c(), first.c());
  auto gamma = matmul(first.gamma(), second.gamma());
  return Frame(std::move(c), std::move(gamma),
               first.det_gamma() * second.det_gamma());
}

double weight_factor(double det_gamma, int weight) noexcept {
  double f = 1.0;
  for (int k = 0; k < weight; ++k) f *= det_gamma;
  for (int k = 0; k > weight; --k) f /= det_gamma;
  return f;
}

TensorObject transform(const TensorObject& t, const Frame& f, Execution exec) {
  if (t.dim() != f.dim()) {
    throw ShapeError("transform: object dim " + std::to_string(t.dim()) +
                     " does not match frame dim " + std::to_string(f.dim()));
  }
  std::vector<double> comps(t.components().begin(), t.components().end());
  for (std::size_t k = 0; k < t.rank(); ++k) {
    if (t.slots()[k] == Variance::Up) {
      comps = detail::apply_to_slot(comps, t.dim(), t.rank(), k, f.c().components(),
                            false, exec);
    } else {
      comps = detail::apply_to_slot(comps, t.dim(), t.rank(), k,
                            f.gamma().components(), true, exec);
    }
  }
  if (t.weight() != 0) {
    const double factor = weight_factor(f.det_gamma(), t.weight());
    for (double& v : comps) v *= factor;
  }
  return TensorObject(t.dim(), t.slots(), t.weight(), std::move(comps));
}

namespace {

std::vector<TensorObject> combine_basis(const Frame& f,
                                        std::span<const TensorObject> basis,
                                        const TensorObject& coeffs) {
  const int d = f.dim();
  if (basis.size() != static_cast<std::size_t>(d)) {
    throw ShapeError("basis must have " + std::to_string(d) +
                     " vectors, got " + std::to_string(basis.size()));
  }
  const int ambient = basis.front().dim();
  std::vector<double> columns(static_cast<std::size_t>(ambient * d));
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const auto& e = basis[s];
    if (e.rank() != 1 || e.slots()[0] != Variance::Up || e.dim() != ambient) {
      throw ShapeError("basis vectors must be rank-1 upper objects of equal dim");
    }
    for (int i = 0; i < ambient; ++i) {
      columns[static_cast<std::size_t>(i * d) + s] =
          e.components()[static_cast<std::size_t>(i)];
    }
  }
  if (ambient == d) {
    const double det = detail::det_by_elimination(columns, d);
    if (detail::is_singular(det, columns, d)) {
      throw SingularError("basis vectors are linearly dependent", std::abs(det));
    }
  }
  // ē_r = Σ_s M(s, r) e_s, where M is c or γ (upper index = row).
  std::vector<TensorObject> out;
  out.reserve(basis.size());
  const auto m = coeffs.components();
  const auto n = static_cast<std::size_t>(d);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<double> v(static_cast<std::size_t>(ambient), 0.0);
    for (std::size_t s = 0; s < n; ++s) {
      const double coeff = m[s * n + r];
      const auto e = basis[s].components();
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeff * e[i];
    }
    out.emplace_back(ambient, std::vector<Variance>{Variance::Up}, 0,
                     std::move(v));
  }
  return out;
}

}  // namespace

std::vector<TensorObject> transform_basis(const Frame& f,
                                          std::span<const TensorObject> basis) {
  return combine_basis(f, basis, f.gamma());
}

std::vector<TensorObject> restore_basis(const Frame& f,
                                        std::span<const TensorObject> basis) {
  return combine_basis(f, basis, f.c());
}

bool verify_transform_law(const TensorObject& old_components,
                          const TensorObject& new_components, const Frame& f,
                          int weight, double tolerance) {
  if (old_components.dim() != new_components.dim() ||
      old_components.slots() != new_components.slots()) {
    throw ShapeError("verify_transform_law: " +
                     old_components.signature_string() + " vs " +
                     new_components.signature_string());
  }
  const auto old_w = old_components.with_weight(weight);
  const auto new_w = new_components.with_weight(weight);

  const auto expected_new = transform(old_w, f);
  const double scale_new =
      std::max({1.0, max_abs(expected_new), max_abs(new_w)});
  if (!(max_abs_difference(expected_new, new_w) <= tolerance * scale_new)) {
    return false;
  }
  const auto expected_old = transform(new_w, f.inverse());
  const double scale_old =
      std::max({1.0, max_abs(expected_old), max_abs(old_w)});
  return max_abs_difference(expected_old, old_w) <= tolerance * scale_old;
}

}  // namespace tensoralg
