#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "tensoralg/minkowski.hpp"

using namespace tensoralg;
using namespace tensoralg::minkowski;

namespace {

LorentzMatrix rotation_xy(double phi) {
  Matrix4 m{};
  m[0][0] = 1;
  m[3][3] = 1;
  m[1][1] = std::cos(phi);
  m[1][2] = -std::sin(phi);
  m[2][1] = std::sin(phi);
  m[2][2] = std::cos(phi);
  return LorentzMatrix::from_matrix(m);
}

double max_entry_diff(const Matrix4& a, const Matrix4& b) {
  double worst = 0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t s = 0; s < 4; ++s) worst = std::max(worst, std::abs(a[r][s] - b[r][s]));
  }
  return worst;
}

}  // namespace

TEST_CASE("boost at 0.6") {
  const auto b = boost(0.6);
  CHECK(std::abs(b(0, 0) - 1.25) < 1e-12);
  CHECK(std::abs(b(1, 1) - 1.25) < 1e-12);
  CHECK(std::abs(b(0, 1) + 0.75) < 1e-12);
  CHECK(std::abs(b(1, 0) + 0.75) < 1e-12);
  CHECK(b(2, 2) == 1.0);
  CHECK(b(3, 3) == 1.0);
}

TEST_CASE("superluminal speeds are rejected") {
  CHECK_THROWS_AS(boost(1.0), SuperluminalError);
  CHECK_THROWS_AS(boost(-1.5), SuperluminalError);
  CHECK_THROWS_AS(rapidity(1.0), SuperluminalError);
}

TEST_CASE("boosts satisfy the Lorentz condition") {
  oracle::Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    const auto b = boost(rng.uniform(-0.99, 0.99));
    CHECK(is_lorentz(b.matrix()));
    CHECK(preserves_eta(b.matrix()));
  }
  Matrix4 bad = boost(0.3).matrix();
  bad[0][0] *= 1.01;
  CHECK_FALSE(is_lorentz(bad));
  CHECK_THROWS_AS(LorentzMatrix::from_matrix(bad), ConventionError);
}

TEST_CASE("compositions preserve the Minkowski product") {
  oracle::Rng rng(42);
  for (int k = 0; k < 50; ++k) {
    auto c = LorentzMatrix::identity();
    for (int j = 0; j < 3; ++j) {
      c = boost(rng.uniform(-0.9, 0.9)).after(c);
      c = rotation_xy(rng.uniform(-3, 3)).after(c);
    }
    const FourVector x{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
    const FourVector y{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
    CHECK(std::abs(mink_product(c.apply(x), c.apply(y)) - mink_product(x, y)) < 1e-9);
  }
}

TEST_CASE("rapidities add") {
  oracle::Rng rng(43);
  for (int k = 0; k < 50; ++k) {
    const double p1 = rng.uniform(-2, 2);
    const double p2 = rng.uniform(-2, 2);
    const auto lhs = boost_from_rapidity({p1}).after(boost_from_rapidity({p2}));
    CHECK(max_entry_diff(lhs.matrix(), boost_from_rapidity({p1 + p2}).matrix()) < 1e-9);
  }
}

TEST_CASE("rapidity and boost agree") {
  for (double beta : {-0.8, -0.1, 0.0, 0.6, 0.95}) {
    const auto psi = rapidity(beta);
    CHECK(std::abs(psi.psi - std::atanh(beta)) < 1e-15);
    CHECK(max_entry_diff(boost(beta).matrix(), boost_from_rapidity({-psi.psi}).matrix()) < 1e-12);
  }
  CHECK(std::abs(rapidity(0.6).psi - std::log(2.0)) < 1e-15);
}

TEST_CASE("tensor view") {
  const auto t = boost(0.6).to_tensor();
  CHECK(t.dim() == 4);
  CHECK(t.slots() == std::vector<Variance>{Variance::Up, Variance::Down});
  CHECK(t({1, 2}) == doctest::Approx(-0.75));
}
