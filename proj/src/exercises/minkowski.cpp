#include <cmath>
#include <numbers>

#include "support.hpp"
#include "tensoralg/minkowski.hpp"

namespace tensoralg::exercises::detail {

namespace {

using namespace tensoralg::minkowski;

constexpr int kCases = 200;

FourVector random_four(Context& ctx) {
  return {ctx.uniform(), ctx.uniform(), ctx.uniform(), ctx.uniform()};
}

/// Spatial rotation about one coordinate axis, embedded in the 3x3 block.
LorentzMatrix spatial_rotation(Context& ctx) {
  const double a = ctx.uniform(-std::numbers::pi, std::numbers::pi);
  const int axis = static_cast<int>(ctx.rng() % 3);
  const int p = 1 + (axis + 1) % 3, q = 1 + (axis + 2) % 3;
  Matrix4 m{};
  for (int k = 0; k < 4; ++k) m[k][k] = 1.0;
  m[p][p] = m[q][q] = std::cos(a);
  m[p][q] = -std::sin(a);
  m[q][p] = std::sin(a);
  return LorentzMatrix::from_matrix(m);
}

/// Product of a few random boosts and rotations.
LorentzMatrix random_lorentz(Context& ctx) {
  LorentzMatrix c = LorentzMatrix::identity();
  for (int k = 0; k < 4; ++k) {
    c = boost(ctx.uniform(-0.9, 0.9)).after(c);
    c = spatial_rotation(ctx).after(c);
  }
  return c;
}

/// max |C^T η C - η| with η = diag(1,-1,-1,-1).
double eta_defect(const Matrix4& c) {
  double worst = 0.0;
  for (int s = 0; s < 4; ++s) {
    for (int r = 0; r < 4; ++r) {
      double sum = c[0][s] * c[0][r];
      for (int k = 1; k < 4; ++k) sum -= c[k][s] * c[k][r];
      const double expected = s != r ? 0.0 : (s == 0 ? 1.0 : -1.0);
      worst = std::max(worst, std::abs(sum - expected));
    }
  }
  return worst;
}

double matrix_diff(const Matrix4& a, const Matrix4& b) {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int s = 0; s < 4; ++s) worst = std::max(worst, std::abs(a[r][s] - b[r][s]));
  }
  return worst;
}

Outcome eq25(Context& ctx) {
  Tally t;
  const FourVector e0{1, 0, 0, 0}, e1{0, 1, 0, 0}, e2{0, 0, 1, 0}, e3{0, 0, 0, 1};
  t.within(std::abs(mink_product(e0, e0) - 1.0), 0.0);
  for (const auto& e : {e1, e2, e3}) t.within(std::abs(mink_product(e, e) + 1.0), 0.0);
  t.within(std::abs(mink_product({1, 1, 0, 0}, {1, 1, 0, 0})), 0.0);
  t.within(std::abs(mink_product({2, 1, 0, 0}, {1, 2, 0, 0})), 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    const FourVector x = random_four(ctx), y = random_four(ctx);
    t.within(std::abs(mink_product(x, y) - mink_product(y, x)), 0.0);
    // Nondegeneracy: the products with the basis recover every component.
    const FourVector back{mink_product(x, e0), -mink_product(x, e1), -mink_product(x, e2),
                          -mink_product(x, e3)};
    for (int k = 0; k < 4; ++k) t.within(std::abs(back[k] - x[k]), 0.0);
  }
  return t.outcome();
}

Outcome eq26(Context& ctx) {
  Tally t;
  for (int trial = 0; trial < kCases; ++trial) {
    const LorentzMatrix c = random_lorentz(ctx);
    const FourVector x = random_four(ctx), y = random_four(ctx);
    t.within(rel(mink_product(c.apply(x), c.apply(y)), mink_product(x, y)), ctx.tolerance);
  }
  return t.outcome();
}

Outcome eq27(Context& ctx) {
  Tally t;
  for (int trial = 0; trial < kCases; ++trial) {
    Matrix4 c = random_lorentz(ctx).matrix();
    if (trial % 2) c[static_cast<std::size_t>(trial % 4)][(trial / 2) % 4] += ctx.uniform(0.1, 1.0);
    t.require(is_lorentz(c, ctx.tolerance) == preserves_eta(c, ctx.tolerance));
    t.require(is_lorentz(c, ctx.tolerance) == (trial % 2 == 0));
  }
  return t.outcome();
}

Outcome eq28(Context& ctx) {
  Tally t;
  const LorentzMatrix b = boost(0.6);
  t.within(std::abs(b(0, 0) - 1.25), ctx.tolerance);
  t.within(std::abs(b(1, 1) - 1.25), ctx.tolerance);
  t.within(std::abs(b(0, 1) + 0.75), ctx.tolerance);
  t.within(std::abs(b(1, 0) + 0.75), ctx.tolerance);
  t.within(matrix_diff(boost(0.0).matrix(), LorentzMatrix::identity().matrix()), 0.0);
  return t.outcome();
}

Outcome ex57(Context& ctx) {
  Tally t;
  for (int trial = 0; trial < kCases; ++trial) {
    const LorentzMatrix c = random_lorentz(ctx);
    t.within(eta_defect(c.matrix()), ctx.tolerance);
    t.require(is_lorentz(c.matrix(), ctx.tolerance));
  }
  return t.outcome();
}

Outcome ex58(Context& ctx) {
  Tally t;
  for (int trial = 0; trial < 50; ++trial) {
    const LorentzMatrix c = random_lorentz(ctx);
    // The images of a Galilean basis are again pseudo-orthonormal.
    for (int s = 0; s < 4; ++s) {
      for (int r = 0; r < 4; ++r) {
        FourVector es{}, er{};
        es[s] = 1.0;
        er[r] = 1.0;
        t.within(std::abs(mink_product(c.apply(es), c.apply(er)) - mink_product(es, er)),
                 ctx.tolerance);
      }
    }
  }
  Matrix4 stretched{};
  stretched[0][0] = 2.0;
  for (int k = 1; k < 4; ++k) stretched[k][k] = 1.0;
  t.require(!is_lorentz(stretched, ctx.tolerance));
  return t.outcome();
}

Outcome ex59(Context& ctx) {
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const double beta = ctx.uniform(-0.99, 0.99);
    const LorentzMatrix b = boost(beta);
    t.within(eta_defect(b.matrix()), ctx.tolerance);
    t.require(is_lorentz(b.matrix(), ctx.tolerance));
  }
  return t.outcome();
}

Outcome ex60(Context& ctx) {
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const double beta = ctx.uniform(-0.99, 0.99);
    const double psi = rapidity(beta).psi;
    const double root = std::sqrt(1.0 - beta * beta);
    t.within(rel(std::sinh(psi), beta / root), ctx.tolerance);
    t.within(rel(std::cosh(psi), 1.0 / root), ctx.tolerance);
    // The boost matrix carries the opposite sign of the hyperbolic-rotation matrix.
    t.within(matrix_diff(boost(beta).matrix(), boost_from_rapidity({-psi}).matrix()),
             ctx.tolerance);
    const double p1 = ctx.uniform(-2.0, 2.0), p2 = ctx.uniform(-2.0, 2.0);
    t.within(matrix_diff(boost_from_rapidity({p1}).after(boost_from_rapidity({p2})).matrix(),
                         boost_from_rapidity({p1 + p2}).matrix()) /
                 std::cosh(p1 + p2),
             ctx.tolerance);
  }
  return t.outcome();
}

}  // namespace

void register_minkowski(Registry& out) {
  out.push_back({"eq25", "pseudoscalar product, signature (+,-,-,-)", eq25});
  out.push_back({"eq26", "Lorentz transitions preserve x . y", eq26});
  out.push_back({"eq27", "condition (27) iff C^T eta C = eta", eq27});
  out.push_back({"eq28", "boost(0.6) block {1.25, -0.75}", eq28});
  out.push_back({"ex57", "Galilean transitions satisfy (27)", ex57});
  out.push_back({"ex58", "(27) implies a Galilean frame", ex58});
  out.push_back({"ex59", "boosts satisfy (27)", ex59});
  out.push_back({"ex60", "rapidity: sh, ch and additivity", ex60});
}

}  // namespace tensoralg::exercises::detail
