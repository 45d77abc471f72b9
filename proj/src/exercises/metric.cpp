#include <cmath>

#include "support.hpp"
#include "tensoralg/determinants.hpp"
#include "tensoralg/einsum.hpp"
#include "tensoralg/symbols.hpp"

namespace tensoralg::exercises::detail {

namespace {

using einsum::Bindings;
using einsum::evaluate;
constexpr auto Up = Variance::Up;
constexpr auto Down = Variance::Down;
constexpr int kCases = 20;

/// Orthonormal-frame cross product of ambient coordinates.
TensorObject cross23(const TensorObject& x, const TensorObject& y) {
  return TensorObject(3, {Up}, 0,
                      {x({2}) * y({3}) - x({3}) * y({2}), x({3}) * y({1}) - x({1}) * y({3}),
                       x({1}) * y({2}) - x({2}) * y({1})});
}

/// Ambient coordinates of a vector given by its components in `basis`.
TensorObject ambient(const std::vector<TensorObject>& basis, const TensorObject& x) {
  TensorObject sum = TensorObject::zeros(3, {Up});
  for (int r = 1; r <= 3; ++r) sum = add(sum, scale(basis[static_cast<std::size_t>(r - 1)], x({r})));
  return sum;
}

Outcome eq18(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kCases; ++trial) {
    const Metric m = random_metric(ctx, d);
    const Frame f = random_frame(ctx, d);
    const TensorObject x = random_tensor(ctx, d, {Up}), y = random_tensor(ctx, d, {Up});
    const Metric mbar = Metric::from_tensor(transform(m.g(), f));
    t.within(rel(inner(transform(x, f), transform(y, f), mbar), inner(x, y, m)), ctx.tolerance);
  }
  return t.outcome();
}

Outcome eq19_21(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kCases; ++trial) {
    const Metric m = random_metric(ctx, d);
    const TensorObject x = random_tensor(ctx, d, {Up});
    const TensorObject lowered = lower(x, 0, m);
    t.within(rel_diff(lowered, evaluate("y_r = g_{rs} x^s", Bindings{{"g", m.g()}, {"x", x}})),
             ctx.tolerance);
    t.within(rel_diff(raise(lowered, 0, m), x), ctx.tolerance);
    // Only the trivial solution exists.
    t.require(m.det_g() > 0.0 && !is_singular(m.g()));
  }
  return t.outcome();
}

Outcome eq22_24(Context& ctx) {
  Tally t;
  for (int trial = 0; trial < kCases; ++trial) {
    const auto basis = random_basis(ctx, 3);
    const Metric m = metric_from_basis(basis);
    const TensorObject x = random_tensor(ctx, 3, {Up}), y = random_tensor(ctx, 3, {Up});
    const TensorObject z = cross(x, y, m);
    // The ambient cross product of the ambient vectors.
    t.within(rel_diff(ambient(basis, z), cross23(ambient(basis, x), ambient(basis, y))),
             ctx.tolerance);
    const TensorObject w = random_tensor(ctx, 3, {Up});
    t.within(rel(triple(x, y, w, m), inner(x, cross(y, w, m), m)), ctx.tolerance);
  }
  const Metric flat = Metric::orthonormal(3);
  const TensorObject e1 = unit(3, 1, Up), e2 = unit(3, 2, Up);
  t.within(max_abs_difference(cross(e1, e2, flat), unit(3, 3, Up)), 0.0);
  return t.outcome();
}

Outcome ex34(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kCases; ++trial) {
    const TensorObject q = rotation(ctx, d);
    std::vector<TensorObject> basis;
    for (int r = 1; r <= d; ++r) {
      basis.push_back(TensorObject::generate(d, {Up}, 0, [&](const MultiIndex& i) {
        return q({r, i[0]});
      }));
    }
    t.within(max_abs_difference(metric_from_basis(basis).g(),
                                kronecker(d, KroneckerKind::LowerLower).with_weight(0)),
             ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex35(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kCases; ++trial) {
    const Metric m = random_metric(ctx, d);
    const TensorObject p =
        evaluate("p_r^t = g_{rs} h^{st}", Bindings{{"g", m.g()}, {"h", m.g_inv()}});
    t.within(max_abs_difference(p, kronecker(d, KroneckerKind::Mixed).with_slots({Down, Up})),
             ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex36(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kCases; ++trial) {
    const Metric m = random_metric(ctx, d);
    const TensorObject x = random_tensor(ctx, d, {Up});
    const TensorObject xl = lower(x, 0, m);
    const double up = evaluate("g_{rs} x^r x^s", Bindings{{"g", m.g()}, {"x", x}}).value();
    const double down = evaluate("h^{rs} x_r x_s", Bindings{{"h", m.g_inv()}, {"x", xl}}).value();
    t.within(rel(down, up), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex37(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kCases; ++trial) {
    const Metric m = random_metric(ctx, d);
    const TensorObject x = random_tensor(ctx, d, {Up}), y = random_tensor(ctx, d, {Up});
    t.within(rel(inner_covariant(lower(x, 0, m), lower(y, 0, m), m), inner(x, y, m)),
             ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex38(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  const TensorObject lo = kronecker(d, KroneckerKind::LowerLower);
  const TensorObject hi = kronecker(d, KroneckerKind::UpperUpper);
  for (int trial = 0; trial < kCases; ++trial) {
    const Frame f = frame_from_matrix(rotation(ctx, d));
    t.within(max_abs_difference(transform(lo, f), lo), ctx.tolerance);
    t.within(max_abs_difference(transform(hi, f), hi), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex39(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  const Metric flat = Metric::orthonormal(d);
  for (int trial = 0; trial < kCases; ++trial) {
    const TensorObject x = random_tensor(ctx, d, {Up, Down, Down});
    const TensorObject raised = raise(x, 1, flat);
    t.within(max_abs_difference(raised.with_slots(x.slots()), x), 0.0);
    t.within(max_abs_difference(lower(x, 0, flat).with_slots(x.slots()), x), 0.0);
  }
  return t.outcome();
}

Outcome ex52(Context& ctx) {
  Tally t;
  for (int trial = 0; trial < kCases; ++trial) {
    const Metric m = random_metric(ctx, 3);
    const Frame f = random_frame(ctx, 3, true);
    const Metric mbar = Metric::from_tensor(transform(m.g(), f));
    for (const auto v : {LeviCivitaVariance::AllDown, LeviCivitaVariance::AllUp}) {
      t.require(verify_transform_law(levi_civita_tensor(m, v), levi_civita_tensor(mbar, v), f, 0,
                                     ctx.tolerance));
    }
  }
  return t.outcome();
}

Outcome ex54(Context& ctx) {
  Tally t;
  for (int trial = 0; trial < kCases; ++trial) {
    const Metric m = random_metric(ctx, 3);
    const TensorObject raised =
        evaluate("w^{rst} = E_{mnp} h^{rm} h^{sn} h^{tp}",
                 Bindings{{"E", levi_civita_tensor(m, LeviCivitaVariance::AllDown)},
                          {"h", m.g_inv()}});
    t.within(rel_diff(raised, levi_civita_tensor(m, LeviCivitaVariance::AllUp)), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex55(Context& ctx) {
  Tally t;
  const TensorObject e = levi_civita_symbol(3, LeviCivitaVariance::AllDown);
  for (int trial = 0; trial < kCases; ++trial) {
    const auto basis = random_basis(ctx, 3);
    const Metric m = metric_from_basis(basis);
    const TensorObject eps = levi_civita_tensor(m, LeviCivitaVariance::AllDown);
    // Ambient triple product of the basis: the determinant of its rows.
    const TensorObject rows = TensorObject::generate(3, {Up, Down}, 0, [&](const MultiIndex& i) {
      return basis[static_cast<std::size_t>(i[0] - 1)]({i[1]});
    });
    const double volume = component_determinant(rows);
    MultiIndex i(3, 1);
    do {
      const double tr =
          triple(unit(3, i[0], Up), unit(3, i[1], Up), unit(3, i[2], Up), m);
      t.within(rel(tr, eps.at(i)), ctx.tolerance);
      t.within(rel(tr, volume * e.at(i)), ctx.tolerance);
    } while (next_index(i, 3));
    t.within(rel(eps({1, 2, 3}), std::sqrt(m.det_g())), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex56(Context& ctx) {
  Tally t;
  for (int trial = 0; trial < kCases; ++trial) {
    const Metric m = random_metric(ctx, 3);
    const TensorObject x = random_tensor(ctx, 3, {Up}), y = random_tensor(ctx, 3, {Up}),
                       z = random_tensor(ctx, 3, {Up});
    const TensorObject lhs = cross(x, cross(y, z, m), m);
    const TensorObject rhs = subtract(scale(y, inner(x, z, m)), scale(z, inner(x, y, m)));
    t.within(rel_diff(lhs, rhs), ctx.tolerance);
  }
  return t.outcome();
}

}  // namespace

void register_metric(Registry& out) {
  out.push_back({"eq18", "g_{rs} x^r y^s is frame independent", eq18});
  out.push_back({"eq19-21", "lowering, raising, trivial kernel", eq19_21});
  out.push_back({"eq22-24", "cross product in a skew frame", eq22_24});
  out.push_back({"ex34", "orthonormal basis gives g = delta", ex34});
  out.push_back({"ex35", "g_{rs} g^{st} = delta", ex35});
  out.push_back({"ex36", "g_{rs} x^r x^s = g^{rs} x_r x_s", ex36});
  out.push_back({"ex37", "g^{rs} preserves the scalar product", ex37});
  out.push_back({"ex38", "delta_{rs}, delta^{rs} are orthogonal tensors", ex38});
  out.push_back({"ex39", "orthonormal raise/lower keeps components", ex39});
  out.push_back({"ex52", "sqrt(g) e_{rst} and e^{rst}/sqrt(g) are true tensors", ex52});
  out.push_back({"ex54", "epsilon^{rst} = epsilon_{mnp} g^{rm} g^{sn} g^{tp}", ex54});
  out.push_back({"ex55", "epsilon_{rst} = (e_r, e_s, e_t)", ex55});
  out.push_back({"ex56", "x x (y x z) = y (x,z) - z (x,y)", ex56});
}

}  // namespace tensoralg::exercises::detail
