#include <algorithm>
#include <array>
#include <cmath>
#include <set>

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

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

/// Sum over all permutations of the three slots with sign: an absolutely
/// antisymmetric rank-3 object.
TensorObject antisymmetrize3(const TensorObject& x) {
  return TensorObject::generate(3, x.slots(), 0, [&](const MultiIndex& i) {
    static constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
    double s = 0.0;
    for (std::size_t p = 0; p < perms.size(); ++p) {
      const MultiIndex j{i[perms[p][0]], i[perms[p][1]], i[perms[p][2]]};
      s += (p < 3 ? 1.0 : -1.0) * x.at(j);
    }
    return s;
  });
}

Outcome ex01(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < 10; ++trial) {
    const TensorObject a = random_tensor(ctx, d, {Down, Down});
    const TensorObject x = random_tensor(ctx, d, {Up});
    const TensorObject b = evaluate("b_r = a_{rs} x^s", Bindings{{"a", a}, {"x", x}});
    for (int r = 1; r <= d; ++r) {
      double expanded = 0.0;
      for (int s = 1; s <= d; ++s) expanded += a({r, s}) * x({s});
      t.within(rel(b({r}), expanded), ctx.tolerance);
    }
  }
  return t.outcome();
}

Outcome ex02(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  const einsum::SignatureMap sigs{{"a", {d, {Down, Down, Down}, 0}},
                                  {"x", {d, {Up}, 0}},
                                  {"y", {d, {Up}, 0}},
                                  {"z", {d, {Up}, 0}}};
  const auto plan = einsum::validate(einsum::parse("a_{rst} x^r y^s z^t"), sigs);
  t.within(std::abs(plan.terms.at(0).naive_cost - std::pow(d, 3)), 0.0);
  return t.outcome();
}

Outcome ex03(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  const TensorObject x = random_matrix(ctx, d);
  t.require(x.rank() == 2 && x.count(Up) == 1 && x.count(Down) == 1);
  t.require(x.size() == static_cast<std::size_t>(d * d));
  // Components enumerate as x^1_1, x^1_2, ..., x^d_d.
  MultiIndex i(2, 1);
  std::size_t k = 0;
  do {
    t.require(x.offset(i) == k++);
  } while (next_index(i, d));
  return t.outcome();
}

Outcome ex04(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  const TensorObject seed = random_tensor(ctx, d, {Down, Down, Down});
  const TensorObject x = TensorObject::generate(d, seed.slots(), 0, [&](const MultiIndex& i) {
    MultiIndex s = i;
    std::sort(s.begin(), s.end());
    return seed.at(s);
  });
  t.require(symmetry_check(x, 0, 1) == Symmetry::Symmetric);
  t.require(symmetry_check(x, 1, 2) == Symmetry::Symmetric);
  const std::set<double> distinct(x.components().begin(), x.components().end());
  const double expected = d * (d + 1) * (d + 2) / 6;
  t.within(std::abs(static_cast<double>(distinct.size()) - expected), 0.0);
  return t.outcome();
}

Outcome ex05(Context& ctx) {
  Tally t;
  for (int trial = 0; trial < 20; ++trial) {
    const TensorObject x = antisymmetrize3(random_tensor(ctx, 3, {Down, Down, Down}));
    const double scale = std::abs(x({1, 2, 3}));
    int nonzero = 0;
    for (const double v : x.components()) {
      if (std::abs(v) > ctx.tolerance) {
        ++nonzero;
        t.within(std::abs(std::abs(v) - scale), ctx.tolerance);
      }
    }
    t.require(nonzero <= 6);
  }
  return t.outcome();
}

Outcome ex06(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < 20; ++trial) {
    const TensorObject r = random_tensor(ctx, d, {Down, Down});
    const TensorObject a = subtract(r, swap_slots(r, 0, 1));
    const TensorObject x = random_tensor(ctx, d, {Up});
    t.within(std::abs(evaluate("a_{rs} x^r x^s", Bindings{{"a", a}, {"x", x}}).value()),
             ctx.tolerance);
    // Converse: the quadratic form fixes the symmetric part by polarization.
    auto q = [&](const TensorObject& v) {
      return evaluate("a_{rs} v^r v^s", Bindings{{"a", r}, {"v", v}}).value();
    };
    const TensorObject sym = TensorObject::generate(d, {Down, Down}, 0, [&](const MultiIndex& i) {
      const TensorObject u = unit(d, i[0], Up), w = unit(d, i[1], Up);
      return (q(add(u, w)) - q(u) - q(w)) / 2.0;
    });
    t.within(rel_diff(sym, symmetrize(r, 0, 1)), ctx.tolerance);
    t.require(symmetry_check(a, 0, 1) == Symmetry::Antisymmetric);
  }
  return t.outcome();
}

Outcome ex07(Context& ctx) {
  Tally t;
  for (const int d : {3, ctx.dim}) {
    t.within(std::abs(contract(kronecker(d, KroneckerKind::Mixed), 0, 1).value() - d), 0.0);
  }
  return t.outcome();
}

Outcome ex08(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  const TensorObject x = random_tensor(ctx, d, {Up});
  const TensorObject y = evaluate(
      "y^r = δ^r_s x^s", Bindings{{"δ", kronecker(d, KroneckerKind::Mixed)}, {"x", x}});
  t.within(max_abs_difference(y, x), 0.0);
  return t.outcome();
}

Outcome ex09(Context& ctx) {
  Tally t;
  const TensorObject e = levi_civita_symbol(3, LeviCivitaVariance::AllDown).with_weight(0);
  for (int trial = 0; trial < 20; ++trial) {
    const TensorObject x = antisymmetrize3(random_tensor(ctx, 3, {Down, Down, Down}));
    t.within(rel_diff(x, scale(e, x({1, 2, 3}))), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex10(Context&) {
  Tally t;
  const TensorObject lo = levi_civita_symbol(3, LeviCivitaVariance::AllDown);
  const TensorObject hi = levi_civita_symbol(3, LeviCivitaVariance::AllUp);
  MultiIndex i(3, 1);
  do {
    const double r = i[0], s = i[1], u = i[2];
    const double formula = (s - r) * (u - r) * (u - s) / 2.0;
    t.within(std::abs(lo.at(i) - formula), 0.0);
    t.within(std::abs(hi.at(i) - formula), 0.0);
  } while (next_index(i, 3));
  return t.outcome();
}

Outcome ex11(Context& ctx) {
  Tally t;
  for (const int d : {3, ctx.dim}) {
    t.within(std::abs(determinant(kronecker(d, KroneckerKind::Mixed)) - 1.0), 0.0);
  }
  const double det = evaluate("e_{rst} x_1^r x_2^s x_3^t",
                              Bindings{{"e", levi_civita_symbol(3, LeviCivitaVariance::AllDown)},
                                       {"x", kronecker(3, KroneckerKind::Mixed)}})
                         .value();
  t.within(std::abs(det - 1.0), 0.0);
  return t.outcome();
}

Outcome ex12(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < 20; ++trial) {
    TensorObject q = rotation(ctx, d);
    if (trial % 2) {
      // Compose with a reflection to reach det = -1.
      q = matmul(diagonal([&] {
                   std::vector<double> v(static_cast<std::size_t>(d), 1.0);
                   v[0] = -1.0;
                   return v;
                 }(), Up, Down),
                 q);
    }
    const TensorObject qt = TensorObject::generate(d, q.slots(), 0, [&](const MultiIndex& i) {
      return q({i[1], i[0]});
    });
    t.within(max_abs_difference(matmul(q, qt), kronecker(d, KroneckerKind::Mixed)),
             ctx.tolerance);
    t.within(std::abs(std::abs(determinant(q)) - 1.0), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex13(Context& ctx) {
  Tally t;
  const TensorObject e = levi_civita_symbol(3, LeviCivitaVariance::AllUp);
  for (int trial = 0; trial < 20; ++trial) {
    const TensorObject x = random_matrix(ctx, 3);
    const double det = component_determinant(x);
    const Bindings b{{"e", e}, {"x", x}};
    t.within(rel(evaluate("e^{rst} x_r^1 x_s^2 x_t^3", b).value(), det), ctx.tolerance);
    t.within(rel(evaluate("e^{rst} x_r^2 x_s^1 x_t^3", b).value(), -det), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex14(Context& ctx) {
  Tally t;
  const TensorObject e = levi_civita_symbol(3, LeviCivitaVariance::AllUp);
  for (int trial = 0; trial < 20; ++trial) {
    const TensorObject x = random_matrix(ctx, 3);
    const TensorObject lhs =
        evaluate("w^{mnp} = e^{rst} x_r^m x_s^n x_t^p", Bindings{{"e", e}, {"x", x}});
    t.within(rel_diff(lhs, scale(e, component_determinant(x))), ctx.tolerance);
  }
  return t.outcome();
}

Outcome ex15(Context&) {
  Tally t;
  const TensorObject lo = levi_civita_symbol(3, LeviCivitaVariance::AllDown);
  const TensorObject hi = levi_civita_symbol(3, LeviCivitaVariance::AllUp);
  MultiIndex i(6, 1);
  do {
    const int m = i[0], n = i[1], p = i[2], r = i[3], s = i[4], u = i[5];
    const double a[3][3] = {{delta(m, r), delta(n, r), delta(p, r)},
                            {delta(m, s), delta(n, s), delta(p, s)},
                            {delta(m, u), delta(n, u), delta(p, u)}};
    const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    t.within(std::abs(lo({m, n, p}) * hi({r, s, u}) - det), 0.0);
  } while (next_index(i, 3));
  return t.outcome();
}

Bindings symbol_pair() {
  return Bindings{{"e", levi_civita_symbol(3, LeviCivitaVariance::AllDown)},
                  {"f", levi_civita_symbol(3, LeviCivitaVariance::AllUp)}};
}

Outcome ex16(Context&) {
  Tally t;
  const TensorObject w = evaluate("w_{mn}^{rs} = e_{mnp} f^{rsp}", symbol_pair());
  MultiIndex i(4, 1);
  do {
    const int m = i[0], n = i[1], r = i[2], s = i[3];
    t.within(std::abs(w.at(i) - (delta(m, r) * delta(n, s) - delta(m, s) * delta(n, r))), 0.0);
  } while (next_index(i, 3));
  return t.outcome();
}

Outcome ex17(Context&) {
  Tally t;
  const TensorObject w = evaluate("w_m^r = e_{mnp} f^{rnp}", symbol_pair());
  t.within(max_abs_difference(w, scale(kronecker(3, KroneckerKind::Mixed), 2.0).with_slots({Down, Up})),
           0.0);
  return t.outcome();
}

Outcome ex18(Context& ctx) {
  Tally t;
  t.within(std::abs(evaluate("e_{mnp} f^{mnp}", symbol_pair()).value() - 6.0), 0.0);
  const int d = std::clamp(ctx.dim, 1, 6);
  std::string letters;
  for (int k = 0; k < d; ++k) letters += static_cast<char>('a' + k);
  const std::string text =
      d == 1 ? "e_a f^a" : "e_{" + letters + "} f^{" + letters + "}";
  double factorial = 1.0;
  for (int k = 2; k <= d; ++k) factorial *= k;
  const double full =
      evaluate(text, Bindings{{"e", levi_civita_symbol(d, LeviCivitaVariance::AllDown)},
                              {"f", levi_civita_symbol(d, LeviCivitaVariance::AllUp)}})
          .value();
  t.within(std::abs(full - factorial), 0.0);
  return t.outcome();
}

Outcome eq01(Context& ctx) {
  Tally t;
  const TensorObject e = levi_civita_symbol(3, LeviCivitaVariance::AllDown);
  for (int trial = 0; trial < 20; ++trial) {
    const TensorObject x = random_matrix(ctx, 3);
    const double lhs = component_determinant(x);
    t.within(rel(evaluate("e_{rst} x_1^r x_2^s x_3^t", Bindings{{"e", e}, {"x", x}}).value(), lhs),
             ctx.tolerance);
    t.within(rel(determinant(x), lhs), ctx.tolerance);
  }
  return t.outcome();
}

Outcome eq02(Context& ctx) {
  Tally t;
  const TensorObject e = levi_civita_symbol(3, LeviCivitaVariance::AllDown);
  for (int trial = 0; trial < 20; ++trial) {
    const TensorObject x = random_matrix(ctx, 3);
    const TensorObject lhs =
        evaluate("w_{mnp} = e_{rst} x_m^r x_n^s x_p^t", Bindings{{"e", e}, {"x", x}});
    t.within(rel_diff(lhs, scale(e, determinant(x))), ctx.tolerance);
  }
  return t.outcome();
}

Outcome det_product(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < 50; ++trial) {
    const TensorObject x = random_matrix(ctx, d), y = random_matrix(ctx, d);
    const TensorObject z = evaluate("z^r_s = x^r_m y^m_s", Bindings{{"x", x}, {"y", y}});
    t.within(rel(determinant(z), determinant(x) * determinant(y)), ctx.tolerance);
  }
  return t.outcome();
}

Outcome det_elimination(Context& ctx) {
  Tally t;
  const int d = ctx.dim;
  for (int trial = 0; trial < 50; ++trial) {
    const TensorObject x = random_matrix(ctx, d);
    t.within(rel(determinant_by_elimination(x), determinant(x)), ctx.tolerance);
    const TensorObject inv = inverse(x);
    t.within(max_abs_difference(matmul(x, inv), kronecker(d, KroneckerKind::Mixed)),
             ctx.tolerance * std::max(1.0, max_abs(inv)));
  }
  return t.outcome();
}

}  // namespace

void register_algebra(Registry& out) {
  out.push_back({"ex01", "a_{rs} x^s = b_r written out", ex01});
  out.push_back({"ex02", "a_{rst} x^r y^s z^t has d^3 terms", ex02});
  out.push_back({"ex03", "x^r_s components and their order", ex03});
  out.push_back({"ex04", "absolutely symmetric x_{rst}: C(d+2,3) distinct", ex04});
  out.push_back({"ex05", "absolutely antisymmetric x_{rst}: at most 6 nonzero", ex05});
  out.push_back({"ex06", "antisymmetric a_{rs}: a_{rs} x^r x^s = 0", ex06});
  out.push_back({"ex07", "delta^r_r = d", ex07});
  out.push_back({"ex08", "delta^r_s x^s = x^r", ex08});
  out.push_back({"ex09", "x_{rst} = x_{123} e_{rst}", ex09});
  out.push_back({"ex10", "e_{rst} = (s-r)(t-r)(t-s)/2", ex10});
  out.push_back({"ex11", "det delta = 1", ex11});
  out.push_back({"ex12", "orthogonal x: det x = +-1", ex12});
  out.push_back({"ex13", "row form of det, row swap flips sign", ex13});
  out.push_back({"ex14", "e^{rst} x_r^m x_s^n x_t^p = e^{mnp} det x", ex14});
  out.push_back({"ex15", "e_{mnp} e^{rst} = det of deltas", ex15});
  out.push_back({"ex16", "e_{mnp} e^{rsp} = delta delta - delta delta", ex16});
  out.push_back({"ex17", "e_{mnp} e^{rnp} = 2 delta", ex17});
  out.push_back({"ex18", "e_{mnp} e^{mnp} = 6 (d! in d dimensions)", ex18});
  out.push_back({"eq01", "det x = e_{rst} x^r_1 x^s_2 x^t_3", eq01});
  out.push_back({"eq02", "e_{rst} x^r_m x^s_n x^t_p = e_{mnp} det x", eq02});
  out.push_back({"eq03", "delta-determinant identity", [](Context&) { return covered("ex15"); }});
  out.push_back({"det-product", "det(xy) = det x det y", det_product});
  out.push_back({"det-elimination", "elimination agrees with e-contraction", det_elimination});
}

}  // namespace tensoralg::exercises::detail
