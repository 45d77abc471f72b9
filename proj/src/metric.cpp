#include "tensoralg/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "format.hpp"
#include "kernels.hpp"
#include "linalg.hpp"
#include "tensoralg/determinants.hpp"

namespace tensoralg {

namespace {

constexpr double kMetricSymmetryTolerance = 1e-12;
constexpr double kMinorTolerance = 1e-12;

void require_vector(const TensorObject& x, const Metric& m, const char* op) {
  if (x.rank() != 1 || x.slots()[0] != Variance::Up) {
    throw ShapeError(std::string(op) +
                     " expects contravariant vectors, got " +
                     x.signature_string());
  }
  if (x.dim() != m.dim()) {
    throw ShapeError(std::string(op) + ": vector dim " +
                     std::to_string(x.dim()) + " vs metric dim " +
                     std::to_string(m.dim()));
  }
}

void require_dim3(const Metric& m, const char* op) {
  if (m.dim() != 3) {
    throw ShapeError(std::string(op) + " is defined for dim 3 only, got " +
                     std::to_string(m.dim()));
  }
}

TensorObject apply_metric(const TensorObject& t, std::size_t slot,
                          const TensorObject& metric, Variance from) {
  if (slot >= t.rank()) {
    throw AddressingError("slot position " + std::to_string(slot) +
                          " out of range for rank " + std::to_string(t.rank()));
  }
  if (t.slots()[slot] != from) {
    throw ConventionError(std::string(from == Variance::Up ? "lowering"
                                                           : "raising") +
                          " needs an " + to_string(from) + " slot at position " +
                          std::to_string(slot));
  }
  if (t.dim() != metric.dim()) {
    throw ShapeError("object dim " + std::to_string(t.dim()) +
                     " does not match metric dim " +
                     std::to_string(metric.dim()));
  }
  auto comps = detail::apply_to_slot(t.components(), t.dim(), t.rank(), slot,
                                     metric.components(), false,
                                     Execution::Parallel);
  auto slots = t.slots();
  slots[slot] = from == Variance::Up ? Variance::Down : Variance::Up;
  return TensorObject(t.dim(), std::move(slots), t.weight(), std::move(comps));
}

}  // namespace

Metric::Metric(TensorObject g, TensorObject g_inv, double det_g)
    : g_(std::move(g)), g_inv_(std::move(g_inv)), det_g_(det_g) {}

Metric Metric::from_tensor(const TensorObject& g) {
  if (g.rank() != 2 || g.slots()[0] != Variance::Down ||
      g.slots()[1] != Variance::Down) {
    throw ShapeError("metric must have slots [down,down], got " +
                     g.signature_string());
  }
  const int d = g.dim();
  const auto n = static_cast<std::size_t>(d);
  const auto c = g.components();
  const double scale = std::max(1.0, max_abs(g));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) {
      if (std::abs(c[r * n + s] - c[s * n + r]) >
          kMetricSymmetryTolerance * scale) {
        throw MetricError("metric is not symmetric: g_" +
                          std::to_string(r + 1) + std::to_string(s + 1) +
                          " != g_" + std::to_string(s + 1) +
                          std::to_string(r + 1));
      }
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<double> minor(k * k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t s = 0; s < k; ++s) minor[r * k + s] = c[r * n + s];
    }
    const double det =
        detail::det_by_elimination(minor, static_cast<int>(k));
    if (!(det > kMinorTolerance)) {
      throw MetricError("metric is not positive-definite: leading minor " +
                        std::to_string(k) + " = " +
                        detail::format_number(det));
    }
  }
  const double det_g = component_determinant(g);
  TensorObject g_inv(d, {Variance::Up, Variance::Up}, 0,
                     detail::lu_inverse(c, d));
  return Metric(g.with_weight(0), std::move(g_inv), det_g);
}

Metric Metric::orthonormal(int dim) {
  return from_tensor(kronecker(dim, KroneckerKind::LowerLower));
}

Metric metric_from_basis(std::span<const TensorObject> basis) {
  if (basis.empty()) throw ShapeError("empty basis");
  const int d = static_cast<int>(basis.size());
  const int ambient = basis.front().dim();
  for (const auto& e : basis) {
    if (e.rank() != 1 || e.slots()[0] != Variance::Up || e.dim() != ambient) {
      throw ShapeError("basis vectors must be rank-1 upper objects of equal dim");
    }
  }
  auto g = TensorObject::generate(
      d, {Variance::Down, Variance::Down}, 0, [&](const MultiIndex& i) {
        const auto a = basis[static_cast<std::size_t>(i[0] - 1)].components();
        const auto b = basis[static_cast<std::size_t>(i[1] - 1)].components();
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
        return s;
      });
  return Metric::from_tensor(g);
}

TensorObject lower(const TensorObject& t, std::size_t slot, const Metric& m) {
  return apply_metric(t, slot, m.g(), Variance::Up);
}

TensorObject raise(const TensorObject& t, std::size_t slot, const Metric& m) {
  return apply_metric(t, slot, m.g_inv(), Variance::Down);
}

double inner(const TensorObject& x, const TensorObject& y, const Metric& m) {
  require_vector(x, m, "inner");
  require_vector(y, m, "inner");
  const auto n = static_cast<std::size_t>(m.dim());
  const auto g = m.g().components();
  double s = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t q = 0; q < n; ++q) {
      s += g[r * n + q] * x.components()[r] * y.components()[q];
    }
  }
  return s;
}

double inner_covariant(const TensorObject& a, const TensorObject& b,
                       const Metric& m) {
  for (const auto* v : {&a, &b}) {
    if (v->rank() != 1 || v->slots()[0] != Variance::Down ||
        v->dim() != m.dim()) {
      throw ShapeError("inner_covariant expects covariant vectors of dim " +
                       std::to_string(m.dim()) + ", got " +
                       v->signature_string());
    }
  }
  const auto n = static_cast<std::size_t>(m.dim());
  const auto gi = m.g_inv().components();
  double s = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t q = 0; q < n; ++q) {
      s += gi[r * n + q] * a.components()[r] * b.components()[q];
    }
  }
  return s;
}

TensorObject levi_civita_tensor(const Metric& m, LeviCivitaVariance variance) {
  require_dim3(m, "levi_civita_tensor");
  const double root = std::sqrt(m.det_g());
  const auto e = levi_civita_symbol(3, variance);
  const double k = variance == LeviCivitaVariance::AllDown ? root : 1.0 / root;
  return scale(e, k).with_weight(0);
}

TensorObject cross(const TensorObject& x, const TensorObject& y,
                   const Metric& m) {
  require_dim3(m, "cross");
  require_vector(x, m, "cross");
  require_vector(y, m, "cross");
  const TensorObject x_low = lower(x, 0, m);
  const auto xl = x_low.components();
  const TensorObject y_low = lower(y, 0, m);
  const auto yl = y_low.components();
  const auto eps = levi_civita_tensor(m, LeviCivitaVariance::AllUp);
  std::vector<double> z(3, 0.0);
  for (int r = 1; r <= 3; ++r) {
    double s = 0.0;
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        s += eps({r, a, b}) * xl[static_cast<std::size_t>(a - 1)] *
             yl[static_cast<std::size_t>(b - 1)];
      }
    }
    z[static_cast<std::size_t>(r - 1)] = s;
  }
  return TensorObject(3, {Variance::Up}, 0, std::move(z));
}

double triple(const TensorObject& x, const TensorObject& y,
              const TensorObject& z, const Metric& m) {
  require_dim3(m, "triple");
  require_vector(x, m, "triple");
  require_vector(y, m, "triple");
  require_vector(z, m, "triple");
  const TensorObject x_low = lower(x, 0, m);
  const auto xl = x_low.components();
  const TensorObject y_low = lower(y, 0, m);
  const auto yl = y_low.components();
  const TensorObject z_low = lower(z, 0, m);
  const auto zl = z_low.components();
  const auto eps = levi_civita_tensor(m, LeviCivitaVariance::AllUp);
  double s = 0.0;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 1; c <= 3; ++c) {
        s += eps({a, b, c}) * xl[static_cast<std::size_t>(a - 1)] *
             yl[static_cast<std::size_t>(b - 1)] *
             zl[static_cast<std::size_t>(c - 1)];
      }
    }
  }
  return s;
}

}  // namespace tensoralg
