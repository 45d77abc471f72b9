#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tensoralg/determinants.hpp"
#include "tensoralg/symbols.hpp"

namespace tensoralg::exercises {

double Context::uniform(double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

namespace detail {

void Tally::within(double dev, double limit) {
  if (std::isnan(dev)) dev = std::numeric_limits<double>::infinity();
  deviation = std::max(deviation, dev);
  if (!(dev <= limit)) ok = false;
}

Outcome Tally::outcome() const {
  return Outcome{ok ? Status::Pass : Status::Fail, deviation, {}};
}

double rel(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

double rel_diff(const TensorObject& a, const TensorObject& b) {
  if (!a.same_signature(b)) return std::numeric_limits<double>::infinity();
  return max_abs_difference(a, b) / std::max(1.0, max_abs(b));
}

TensorObject random_tensor(Context& ctx, int dim, std::vector<Variance> slots,
                           int weight) {
  return TensorObject::generate(dim, std::move(slots), weight,
                                [&](const MultiIndex&) { return ctx.uniform(); });
}

TensorObject random_matrix(Context& ctx, int dim) {
  return random_tensor(ctx, dim, {Variance::Up, Variance::Down});
}

Frame random_frame(Context& ctx, int dim, bool positive) {
  while (true) {
    TensorObject c = random_matrix(ctx, dim);
    const double det = component_determinant(c);
    if (std::abs(det) < 0.1) continue;
    if (positive && det < 0) {
      c = TensorObject::generate(dim, c.slots(), 0, [&](const MultiIndex& i) {
        return i[0] == 1 ? -c.at(i) : c.at(i);
      });
    }
    return frame_from_matrix(c);
  }
}

TensorObject rotation(Context& ctx, int dim) {
  TensorObject r = kronecker(dim, KroneckerKind::Mixed);
  for (int p = 1; p <= dim; ++p) {
    for (int q = p + 1; q <= dim; ++q) {
      const double a = ctx.uniform(-std::numbers::pi, std::numbers::pi);
      const TensorObject g = TensorObject::generate(
          dim, {Variance::Up, Variance::Down}, 0, [&](const MultiIndex& i) {
            const int row = i[0], col = i[1];
            if (row == p && col == p) return std::cos(a);
            if (row == q && col == q) return std::cos(a);
            if (row == p && col == q) return -std::sin(a);
            if (row == q && col == p) return std::sin(a);
            return row == col ? 1.0 : 0.0;
          });
      r = matmul(g, r);
    }
  }
  return r;
}

Metric random_metric(Context& ctx, int dim) {
  const TensorObject a = random_matrix(ctx, dim);
  return Metric::from_tensor(TensorObject::generate(
      dim, {Variance::Down, Variance::Down}, 0, [&](const MultiIndex& i) {
        double s = i[0] == i[1] ? 0.5 : 0.0;
        for (int k = 1; k <= dim; ++k) s += a({k, i[0]}) * a({k, i[1]});
        return s;
      }));
}

std::vector<TensorObject> random_basis(Context& ctx, int dim) {
  while (true) {
    TensorObject rows = random_matrix(ctx, dim);
    const double det = component_determinant(rows);
    if (std::abs(det) < 0.1) continue;
    std::vector<TensorObject> basis;
    for (int r = 1; r <= dim; ++r) {
      const double sign = (r == 1 && det < 0) ? -1.0 : 1.0;
      basis.push_back(TensorObject::generate(
          dim, {Variance::Up}, 0,
          [&](const MultiIndex& i) { return sign * rows({r, i[0]}); }));
    }
    return basis;
  }
}

TensorObject unit(int dim, int r, Variance v) {
  return TensorObject::generate(dim, {v}, 0, [&](const MultiIndex& i) {
    return i[0] == r ? 1.0 : 0.0;
  });
}

TensorObject diagonal(const std::vector<double>& d, Variance a, Variance b) {
  const int dim = static_cast<int>(d.size());
  return TensorObject::generate(dim, {a, b}, 0, [&](const MultiIndex& i) {
    return i[0] == i[1] ? d[static_cast<std::size_t>(i[0] - 1)] : 0.0;
  });
}

TensorObject direct_transform(const TensorObject& t, const Frame& f) {
  const int d = t.dim();
  const std::size_t rank = t.rank();
  const double factor = std::pow(f.det_gamma(), t.weight());
  return TensorObject::generate(d, t.slots(), t.weight(), [&](const MultiIndex& j) {
    double sum = 0.0;
    MultiIndex r(rank, 1);
    do {
      double term = t.at(r);
      for (std::size_t k = 0; k < rank; ++k) {
        term *= t.slots()[k] == Variance::Up ? f.c()({j[k], r[k]})
                                             : f.gamma()({r[k], j[k]});
      }
      sum += term;
    } while (next_index(r, d));
    return factor * sum;
  });
}

Outcome covered(std::string operations) {
  return Outcome{Status::Covered, 0.0, std::move(operations)};
}

}  // namespace detail
}  // namespace tensoralg::exercises
