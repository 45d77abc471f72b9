#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "tensoralg/determinants.hpp"
#include "tensoralg/symbols.hpp"

using namespace tensoralg;
using V = Variance;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("identity has determinant one") {
  for (int d = 1; d <= 6; ++d) {
    CHECK(determinant(kronecker(d, KroneckerKind::Mixed)) == 1.0);
  }
}

TEST_CASE("determinant matches the cofactor oracle") {
  oracle::Rng rng(11);
  for (int d = 1; d <= 6; ++d) {
    for (int k = 0; k < 20; ++k) {
      const auto m = oracle::random_matrix(rng, d);
      const auto t = oracle::from_matrix(m, V::Up, V::Down);
      const double ref = oracle::cofactor_det(m);
      CHECK(rel(determinant(t), ref) < 1e-12);
      CHECK(rel(determinant_by_elimination(t), ref) < 1e-12);
      CHECK(rel(component_determinant(t.with_slots({V::Down, V::Down})), ref) < 1e-12);
    }
  }
}

TEST_CASE("row and column swaps flip the sign exactly") {
  oracle::Rng rng(12);
  for (int k = 0; k < 50; ++k) {
    oracle::Matrix m(3, std::vector<double>(3));
    for (auto& row : m) {
      for (auto& v : row) v = rng.integer(-9, 9);
    }
    auto rows = m;
    std::swap(rows[0], rows[2]);
    auto cols = m;
    for (auto& row : cols) std::swap(row[0], row[1]);
    const double det = determinant(oracle::from_matrix(m, V::Up, V::Down));
    CHECK(determinant(oracle::from_matrix(rows, V::Up, V::Down)) == -det);
    CHECK(determinant(oracle::from_matrix(cols, V::Up, V::Down)) == -det);
  }
}

TEST_CASE("product theorem") {
  oracle::Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const auto x = oracle::from_matrix(oracle::random_matrix(rng, 3), V::Up, V::Down);
    const auto y = oracle::from_matrix(oracle::random_matrix(rng, 3), V::Up, V::Down);
    CHECK(rel(determinant(matmul(x, y)), determinant(x) * determinant(y)) < 1e-9);
  }
}

TEST_CASE("inverse matches Gauss-Jordan") {
  oracle::Rng rng(14);
  for (int d = 1; d <= 5; ++d) {
    const auto m = oracle::random_invertible(rng, d);
    const auto inv = oracle::to_matrix(inverse(oracle::from_matrix(m, V::Up, V::Down)));
    CHECK(oracle::max_diff(inv, oracle::gauss_jordan_inverse(m)) < 1e-9);
  }
}

TEST_CASE("singular matrices are rejected") {
  const oracle::Matrix m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  const auto t = oracle::from_matrix(m, V::Up, V::Down);
  CHECK(is_singular(t));
  CHECK_THROWS_AS(inverse(t), SingularError);
  CHECK_FALSE(is_singular(kronecker(3, KroneckerKind::Mixed)));
}

TEST_CASE("layout is checked") {
  CHECK_THROWS_AS(determinant(TensorObject::zeros(3, {V::Down, V::Up})), ShapeError);
  CHECK_THROWS_AS(determinant(TensorObject::zeros(3, {V::Up})), ShapeError);
  CHECK_THROWS_AS(component_determinant(TensorObject::zeros(3, {V::Up})), ShapeError);
}
