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
constexpr int kFrames = 20;

TensorObject delta_mixed(int d) { return kronecker(d, KroneckerKind::Mixed); }

Frame diag211() {
  return frame_from_matrix(diagonal({2.0, 1.0, 1.0}, Up, Down));
}

/// Swap of the last two slots plus or minus the original.
TensorObject pair_part(const TensorObject& x, double sign) {
  return add(x, scale(swap_slots(x, 1, 2), sign));
}

Outcome eq04_05(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject x = random_tensor(ctx, d, {Up});
    const TensorObject xbar = transform(x, f);
    const TensorObject direct = evaluate("y^r = c^r_s x^s", Bindings{{"c", f.c()}, {"x", x}});
    t.within(rel_diff(xbar, direct), ctx.tolerance);
    t.within(rel_diff(evaluate("y^r = g^r_s x^s", Bindings{{"g", f.gamma()}, {"x", xbar}}), x),
             ctx.tolerance);
  }
  return t.outcome();
}

Outcome eq06_07(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject a = random_tensor(ctx, d, {Down});
    const TensorObject abar = transform(a, f);
    TensorObject expected = TensorObject::generate(d, {Down}, 0, [&](const MultiIndex& r) {
      double s = 0.0;
      for (int k = 1; k <= d; ++k) s += f.gamma()({k, r[0]}) * a({k});
      return s;
    });
    t.within(rel_diff(abar, expected), ctx.tolerance);
  }
  return t.outcome();
}

Outcome scalar_invariance(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject a = random_tensor(ctx, d, {Down}), x = random_tensor(ctx, d, {Up});
    const double before = evaluate("a_r x^r", Bindings{{"a", a}, {"x", x}}).value();
    const double after =
        evaluate("a_r x^r", Bindings{{"a", transform(a, f)}, {"x", transform(x, f)}}).value();
    t.within(rel(after, before), ctx.tolerance);
  }
  return t.outcome();
}

Outcome eq08(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject a = symmetrize(random_tensor(ctx, d, {Down, Down}), 0, 1);
    const TensorObject abar = transform(a, f);
    t.within(max_abs_difference(abar, swap_slots(abar, 0, 1)) / std::max(1.0, max_abs(abar)),
             ctx.tolerance);
  }
  return t.outcome();
}

Outcome eq09_10(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject a = random_tensor(ctx, d, {Down, Down});
    const TensorObject expected = evaluate("b_{mn} = g^r_m g^s_n a_{rs}",
                                           Bindings{{"g", f.gamma()}, {"a", a}});
    t.within(rel_diff(transform(a, f), expected), ctx.tolerance);
    const TensorObject x = random_tensor(ctx, d, {Up});
    const double q = evaluate("a_{rs} x^r x^s", Bindings{{"a", a}, {"x", x}}).value();
    const double qbar =
        evaluate("a_{rs} x^r x^s", Bindings{{"a", transform(a, f)}, {"x", transform(x, f)}})
            .value();
    t.within(rel(qbar, q), ctx.tolerance);
  }
  return t.outcome();
}

Outcome eq11_13(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const auto basis = random_basis(ctx, d);
    const auto fresh = transform_basis(f, basis);
    const auto back = restore_basis(f, fresh);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      t.within(rel_diff(back[r], basis[r]), ctx.tolerance);
      // e_r = c^s_r ē_s
      TensorObject sum = TensorObject::zeros(d, {Up});
      for (int s = 1; s <= d; ++s) {
        sum = add(sum, scale(fresh[static_cast<std::size_t>(s - 1)],
                             f.c()({s, static_cast<int>(r) + 1})));
      }
      t.within(rel_diff(sum, basis[r]), ctx.tolerance);
    }
  }
  return t.outcome();
}

Outcome eq14(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject a = random_matrix(ctx, d);
    const TensorObject expected = evaluate("b^r_s = g^t_s c^r_m a^m_t",
                                           Bindings{{"g", f.gamma()}, {"c", f.c()}, {"a", a}});
    t.within(rel_diff(transform(a, f), expected), ctx.tolerance);
  }
  return t.outcome();
}

Outcome eq15(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  const std::vector<std::vector<Variance>> shapes{
      {}, {Up}, {Down}, {Up, Down}, {Down, Up}, {Up, Up}, {Down, Down},
      {Up, Down, Down}, {Down, Up, Up}, {Up, Up, Up}, {Down, Down, Down}};
  for (int trial = 0; trial < 5; ++trial) {
    const Frame f = random_frame(ctx, d);
    for (const auto& slots : shapes) {
      for (const int w : {0, 1, -2}) {
        const TensorObject x = random_tensor(ctx, d, slots, w);
        t.within(rel_diff(transform(x, f), direct_transform(x, f)), ctx.tolerance);
      }
    }
  }
  return t.outcome();
}

Outcome trace_invariance(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject a = random_matrix(ctx, d);
    t.within(rel(contract(transform(a, f), 0, 1).value(), contract(a, 0, 1).value()),
             ctx.tolerance);
  }
  return t.outcome();
}

/// Build the quotient-rule situation x(r,s,t) y^{st} = z^r in the new frame
/// from probe objects ȳ = unit at (s,t), and check x transforms as a
/// pseudotensor of weight N - M.
Outcome quotient_rule(Context& ctx, int m, int n) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < 5; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject x = random_tensor(ctx, d, {Up, Down, Down}, n - m);
    TensorObject xbar = TensorObject::zeros(d, x.slots(), n - m);
    std::vector<double> comps(xbar.size());
    for (int s = 1; s <= d; ++s) {
      for (int u = 1; u <= d; ++u) {
        const TensorObject ybar = TensorObject::generate(d, {Up, Up}, m, [&](const MultiIndex& i) {
          return i[0] == s && i[1] == u ? 1.0 : 0.0;
        });
        const TensorObject y = transform(ybar, f.inverse());
        const TensorObject z = evaluate("z^r = x^r_{st} y^{st}", Bindings{{"x", x}, {"y", y}});
        const TensorObject zbar = transform(z, f);
        for (int r = 1; r <= d; ++r) {
          const MultiIndex idx{r, s, u};
          comps[xbar.offset(idx)] = zbar({r});
        }
      }
    }
    xbar = TensorObject(d, x.slots(), n - m, std::move(comps));
    t.require(verify_transform_law(x, xbar, f, n - m, ctx.tolerance));
    t.within(rel_diff(xbar, transform(x, f)), ctx.tolerance);
  }
  return t.outcome();
}

/// x = X + N with X a tensor and N noise of the given symmetry in (s,t),
/// drawn independently in each frame. Relation (16) holds against y of the
/// opposite symmetry; x ± swap(x) is a tensor, x itself is not.
Outcome quotient_variant(Context& ctx, double noise_sign, double part_sign) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < 5; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject big = random_tensor(ctx, d, {Up, Down, Down});
    auto noise = [&] { return pair_part(random_tensor(ctx, d, {Up, Down, Down}), noise_sign); };
    const TensorObject x = add(big, noise());
    const TensorObject xbar = add(transform(big, f), noise());
    const TensorObject y = [&] {
      const TensorObject raw = random_tensor(ctx, d, {Up, Up});
      return add(raw, scale(swap_slots(raw, 0, 1), -noise_sign));
    }();
    const TensorObject z = evaluate("z^r = x^r_{st} y^{st}", Bindings{{"x", x}, {"y", y}});
    const TensorObject zbar = evaluate(
        "z^r = x^r_{st} y^{st}", Bindings{{"x", xbar}, {"y", transform(y, f)}});
    t.within(rel_diff(zbar, transform(z, f)), ctx.tolerance);
    t.require(verify_transform_law(pair_part(x, part_sign), pair_part(xbar, part_sign), f, 0,
                                   ctx.tolerance));
    t.require(!verify_transform_law(x, xbar, f, 0, ctx.tolerance));
  }
  return t.outcome();
}

Outcome ex19(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject x = random_tensor(ctx, d, {Down});
    const TensorObject xbar = transform(x, f);
    const TensorObject back = TensorObject::generate(d, {Down}, 0, [&](const MultiIndex& r) {
      double s = 0.0;
      for (int k = 1; k <= d; ++k) s += f.c()({k, r[0]}) * xbar({k});
      return s;
    });
    t.within(rel_diff(back, x), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex20(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const Bindings b{{"g", f.gamma()}, {"c", f.c()}};
    t.within(max_abs_difference(evaluate("w^t_r = g^s_r c^t_s", b), delta_mixed(d)),
             ctx.tolerance);
    t.within(max_abs_difference(evaluate("w^s_t = g^s_r c^r_t", b), delta_mixed(d)),
             ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex21(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const auto basis = random_basis(ctx, d);
    const auto fresh = transform_basis(f, basis);
    for (int r = 1; r <= d; ++r) {
      TensorObject sum = TensorObject::zeros(d, {Up});
      for (int s = 1; s <= d; ++s) {
        sum = add(sum, scale(basis[static_cast<std::size_t>(s - 1)], f.gamma()({s, r})));
      }
      t.within(rel_diff(fresh[static_cast<std::size_t>(r - 1)], sum), ctx.tolerance);
    }
  }
  return t.outcome();
}

Outcome ex22(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject x2 = random_tensor(ctx, d, {Up, Up});
    const TensorObject x3 = random_tensor(ctx, d, {Up, Down, Down});
    t.within(rel_diff(transform(x2, f), direct_transform(x2, f)), ctx.tolerance);
    t.within(rel_diff(transform(x3, f), direct_transform(x3, f)), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex23(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject y = random_matrix(ctx, d), z = random_tensor(ctx, d, {Down});
    const TensorObject x = evaluate("x^r_{st} = y^r_s z_t", Bindings{{"y", y}, {"z", z}});
    const TensorObject xbar = evaluate(
        "x^r_{st} = y^r_s z_t", Bindings{{"y", transform(y, f)}, {"z", transform(z, f)}});
    t.require(verify_transform_law(x, xbar, f, 0, ctx.tolerance));
    t.within(rel_diff(xbar, transform(x, f)), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex24(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject raw = random_tensor(ctx, d, {Up, Up});
    const TensorObject sym = symmetrize(raw, 0, 1);
    const TensorObject anti = subtract(raw, sym);
    for (const auto& [a, expected] : {std::pair{sym, Symmetry::Symmetric},
                                      std::pair{anti, Symmetry::Antisymmetric}}) {
      const TensorObject abar = transform(a, f);
      const double tol = ctx.tolerance * std::max(1.0, max_abs(abar));
      t.require(symmetry_check(a, 0, 1) == expected);
      t.require(symmetry_check(abar, 0, 1, tol) == expected);
    }
  }
  return t.outcome();
}

Outcome ex25(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    t.within(max_abs_difference(transform(delta_mixed(d), f), delta_mixed(d)), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex26(Context& ctx) {
  Tally t;
  const Frame f = diag211();
  const TensorObject lower = kronecker(3, KroneckerKind::LowerLower);
  const TensorObject moved = transform(lower, f);
  const TensorObject expected = diagonal({0.25, 1.0, 1.0}, Down, Down);
  t.within(max_abs_difference(moved, expected), ctx.tolerance);
  t.within(max_abs_difference(direct_transform(lower, f), expected), ctx.tolerance);
  t.require(max_abs_difference(moved, lower) > ctx.tolerance);
  t.require(!verify_transform_law(lower, lower, f, 0, ctx.tolerance));
  return t.outcome();
}

Outcome ex27(Context& ctx) {
  Tally t;
  const TensorObject upper = kronecker(3, KroneckerKind::UpperUpper);
  const TensorObject moved = transform(upper, diag211());
  t.within(max_abs_difference(moved, diagonal({4.0, 1.0, 1.0}, Up, Up)), ctx.tolerance);
  t.require(max_abs_difference(moved, upper) > ctx.tolerance);
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, 3);
    // Invariance would force c c^T = 1, which a random frame misses.
    t.require(!verify_transform_law(upper, upper, f, 0, ctx.tolerance));
  }
  return t.outcome();
}

Outcome ex29(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject x = random_tensor(ctx, d, {Up, Down, Down}), y = random_matrix(ctx, d);
    const char* expr = "w^p_{st} = x^r_{st} y^p_r";
    const TensorObject w = evaluate(expr, Bindings{{"x", x}, {"y", y}});
    t.require(w.count(Down) == 2 && w.count(Up) == 1);
    const TensorObject wbar =
        evaluate(expr, Bindings{{"x", transform(x, f)}, {"y", transform(y, f)}});
    t.require(verify_transform_law(w, wbar, f, 0, ctx.tolerance));
  }
  return t.outcome();
}

Outcome ex30(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject a = random_tensor(ctx, d, {Up, Down, Down});
    const TensorObject b = random_tensor(ctx, d, {Up, Down, Down});
    const TensorObject x = random_tensor(ctx, d, {Up});
    const char* expr = "d^r_s = a^r_{st} x^t + b^r_{st} x^t";
    const TensorObject dd = evaluate(expr, Bindings{{"a", a}, {"b", b}, {"x", x}});
    const TensorObject dbar = evaluate(
        expr, Bindings{{"a", transform(a, f)}, {"b", transform(b, f)}, {"x", transform(x, f)}});
    t.within(rel_diff(dbar, transform(dd, f)), ctx.tolerance);
    // Cancellation: b = -a gives the zero object.
    t.within(max_abs(evaluate(expr, Bindings{{"a", a}, {"b", scale(a, -1.0)}, {"x", x}})), 0.0);
  }
  return t.outcome();
}

/// a_{rs} symmetric, a_{rs} x^r x^s a scalar for every x: recover ā by
/// polarization of the new-frame quadratic form.
Outcome ex33(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < 5; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject a = symmetrize(random_tensor(ctx, d, {Down, Down}), 0, 1);
    const Frame back = f.inverse();
    auto qbar = [&](const TensorObject& xbar) {
      const TensorObject x = transform(xbar, back);
      return evaluate("a_{rs} x^r x^s", Bindings{{"a", a}, {"x", x}}).value();
    };
    const TensorObject abar = TensorObject::generate(d, {Down, Down}, 0, [&](const MultiIndex& i) {
      const TensorObject u = unit(d, i[0], Up), w = unit(d, i[1], Up);
      return (qbar(add(u, w)) - qbar(u) - qbar(w)) / 2.0;
    });
    t.require(verify_transform_law(a, abar, f, 0, ctx.tolerance));
  }
  return t.outcome();
}

Outcome ex40(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const int m = 2;
    const double v = ctx.uniform(0.5, 2.0);
    const TensorObject x = TensorObject::scalar(v, d, 1);
    const TensorObject y = random_tensor(ctx, d, {Up, Down}, m);
    const double vbar = transform(x, f).value();
    const TensorObject w = scale(y, std::pow(v, -m)).with_weight(0);
    const TensorObject wbar = scale(transform(y, f), std::pow(vbar, -m)).with_weight(0);
    t.require(verify_transform_law(w, wbar, f, 0, ctx.tolerance));
  }
  return t.outcome();
}

Outcome ex41(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const int w = trial % 5 - 2;
    const TensorObject a = random_tensor(ctx, d, {Up, Down}, w);
    const TensorObject b = random_tensor(ctx, d, {Up, Down}, w);
    const TensorObject sum = add(a, b);
    t.require(sum.weight() == w);
    t.within(rel_diff(add(transform(a, f), transform(b, f)), transform(sum, f)), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex42(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const int m = trial % 3 - 1, p = trial % 2 + 1;
    const TensorObject a = random_tensor(ctx, d, {Up, Down}, m);
    const TensorObject b = random_tensor(ctx, d, {Down}, p);
    const TensorObject ab = outer_product(a, b);
    t.require(ab.weight() == m + p && ab.count(Down) == 2 && ab.count(Up) == 1);
    t.within(rel_diff(outer_product(transform(a, f), transform(b, f)), transform(ab, f)),
             ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex43(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const int w = trial % 5 - 2;
    const TensorObject x = random_tensor(ctx, d, {Up, Down, Down}, w);
    const TensorObject c = contract(x, 0, 2);
    t.require(c.weight() == w && c.rank() == 1 && c.slot(0) == Down);
    t.within(rel_diff(contract(transform(x, f), 0, 2), transform(c, f)), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex45(Context& ctx) {
  Tally t;
  const TensorObject upper = levi_civita_symbol(3, LeviCivitaVariance::AllUp);
  const TensorObject lower = levi_civita_symbol(3, LeviCivitaVariance::AllDown);
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, 3);
    t.require(verify_transform_law(upper, upper, f, 1, ctx.tolerance));
    t.require(verify_transform_law(lower, lower, f, -1, ctx.tolerance));
    t.within(max_abs_difference(transform(upper, f), upper), ctx.tolerance);
    t.within(max_abs_difference(transform(lower, f), lower), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex46(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject z = TensorObject::zeros(d, {Up, Down, Down}, trial % 5 - 2);
    t.within(max_abs(transform(z, f)), 0.0);
  }
  return t.outcome();
}

Outcome ex47(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject a = random_tensor(ctx, d, {Up, Down}, trial % 3 - 1);
    const TensorObject b = add(scale(a, 0.5), scale(a, 0.5));
    t.within(max_abs_difference(a, b), 0.0);
    t.within(max_abs_difference(transform(a, f), transform(b, f)), 0.0);
  }
  return t.outcome();
}

Outcome ex48(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const int m = trial % 5 - 2;
    const TensorObject x = random_tensor(ctx, d, {Up, Down, Down}, m);
    const TensorObject xbar = transform(x, f);
    // x^r_{st} = (det c)^M γ^r_m c^n_s c^p_t x̄^m_{np}
    const TensorObject back = scale(
        evaluate("y^r_{st} = g^r_m c^n_s c^p_t x^m_{np}",
                 Bindings{{"g", f.gamma()}, {"c", f.c()}, {"x", xbar.with_weight(0)}}),
        std::pow(1.0 / f.det_gamma(), m));
    t.within(rel_diff(back.with_weight(m), x), ctx.tolerance);
    t.require(verify_transform_law(x, xbar, f, m, ctx.tolerance));
  }
  return t.outcome();
}

Outcome det_law(Context& ctx, std::vector<Variance> slots, int weight) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const TensorObject x = random_tensor(ctx, d, slots);
    const double before = component_determinant(x);
    const double after = component_determinant(transform(x, f));
    t.within(rel(after, weight_factor(f.det_gamma(), weight) * before), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex53(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < kFrames; ++trial) {
    const Frame f = random_frame(ctx, d);
    const double alpha0 = ctx.uniform(-2.0, 2.0);
    const TensorObject y = random_tensor(ctx, d, {Down, Down});
    const TensorObject u = random_tensor(ctx, d, {Down}), v = random_tensor(ctx, d, {Down});
    const TensorObject x = add(scale(y, alpha0), outer_product(u, v));
    const TensorObject xbar = transform(x, f), ybar = transform(y, f);
    const TensorObject root = subtract(xbar, scale(ybar, alpha0));
    t.within(std::abs(component_determinant(root)) /
                 std::pow(std::max(1.0, max_abs(root)), d),
             ctx.tolerance);
    for (int k = 0; k < 3; ++k) {
      const double alpha = ctx.uniform(-2.0, 2.0);
      const double before = component_determinant(subtract(x, scale(y, alpha)));
      const double after = component_determinant(subtract(xbar, scale(ybar, alpha)));
      t.within(rel(after, weight_factor(f.det_gamma(), 2) * before), ctx.tolerance);
    }
  }
  return t.outcome();
}

}  // namespace

void register_frames(Registry& out) {
  out.push_back({"eq04-05", "x' = c x and x = gamma x'", eq04_05});
  out.push_back({"eq06-07", "covariant law a'_r = gamma^s_r a_s", eq06_07});
  out.push_back({"eq08", "symmetric a_{rs} stays symmetric", eq08});
  out.push_back({"eq09-10", "quadratic form law a'_{mn} = gamma gamma a", eq09_10});
  out.push_back({"eq11-13", "basis law e_r = c^s_r e'_s", eq11_13});
  out.push_back({"eq14", "operator law a'^r_s = gamma^t_s c^r_m a^m_t", eq14});
  out.push_back({"eq15", "general law against direct summation", eq15});
  out.push_back({"eq16-17", "quotient rule", [](Context& c) { return quotient_rule(c, 0, 0); }});
  out.push_back({"scalar-invariance", "a_r x^r is frame independent", scalar_invariance});
  out.push_back({"trace-invariance", "a^r_r is frame independent", trace_invariance});
  out.push_back({"ex19", "x_r = c^s_r x'_s", ex19});
  out.push_back({"ex20", "gamma is the inverse of c", ex20});
  out.push_back({"ex21", "e'_r = gamma^s_r e_s", ex21});
  out.push_back({"ex22", "laws for x^{rs} and x^r_{st}", ex22});
  out.push_back({"ex23", "x^r_{st} = y^r_s z_t holds in every frame", ex23});
  out.push_back({"ex24", "symmetry is frame independent", ex24});
  out.push_back({"ex25", "delta^r_s is a tensor", ex25});
  out.push_back({"ex26", "delta_{rs} is not a tensor", ex26});
  out.push_back({"ex27", "delta^{rs} is not a tensor", ex27});
  out.push_back({"ex28", "product and contraction definitions",
                 [](Context&) { return covered("outer_product, contract"); }});
  out.push_back({"ex29", "x^r_{st} y^p_r is a rank (2,1) tensor", ex29});
  out.push_back({"ex30", "(a + b) x = d is a tensor equation", ex30});
  out.push_back({"ex31", "symmetric y: x(r,s,t) + x(r,t,s) is a tensor",
                 [](Context& c) { return quotient_variant(c, -1.0, 1.0); }});
  out.push_back({"ex32", "antisymmetric y: x(r,s,t) - x(r,t,s) is a tensor",
                 [](Context& c) { return quotient_variant(c, 1.0, -1.0); }});
  out.push_back({"ex33", "symmetric a with scalar a x x is a tensor", ex33});
  out.push_back({"ex40", "x^(-M) y is a true tensor", ex40});
  out.push_back({"ex41", "sum of pseudotensors", ex41});
  out.push_back({"ex42", "product of pseudotensors, weight M + P", ex42});
  out.push_back({"ex43", "contraction of a pseudotensor keeps weight", ex43});
  out.push_back({"ex44", "quotient rule for pseudotensors",
                 [](Context& c) { return quotient_rule(c, 1, -1); }});
  out.push_back({"ex45", "e^{rst} has weight 1, e_{rst} weight -1", ex45});
  out.push_back({"ex46", "zero pseudotensor stays zero", ex46});
  out.push_back({"ex47", "equal pseudotensors stay equal", ex47});
  out.push_back({"ex48", "inverse law with (det c)^M", ex48});
  out.push_back({"ex49", "det x^r_s is a true scalar",
                 [](Context& c) { return det_law(c, {Up, Down}, 0); }});
  out.push_back({"ex50", "det x_{rs} has weight 2",
                 [](Context& c) { return det_law(c, {Down, Down}, 2); }});
  out.push_back({"ex51", "det x^{rs} has weight -2",
                 [](Context& c) { return det_law(c, {Up, Up}, -2); }});
  out.push_back({"ex53", "roots of det(x - alpha y) are invariant", ex53});
}

}  // namespace tensoralg::exercises::detail
