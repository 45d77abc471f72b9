#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "tensoralg/core.hpp"

using namespace tensoralg;
using V = Variance;

TEST_CASE("storage is lexicographic with slot 0 outermost") {
  const auto t = TensorObject::generate(3, {V::Up, V::Down}, 0, [](const MultiIndex& i) {
    return 10 * i[0] + i[1];
  });
  CHECK(t.size() == 9);
  CHECK(t.components()[0] == 11);
  CHECK(t.components()[1] == 12);
  CHECK(t.components()[3] == 21);
  CHECK(t({3, 2}) == 32);
  const int idx[] = {2, 3};
  CHECK(t.offset(idx) == 5);
}

TEST_CASE("construction rejects bad shapes") {
  CHECK_THROWS_AS(TensorObject(0, {}, 0, {1.0}), ShapeError);
  CHECK_THROWS_AS(TensorObject(3, {V::Up}, 0, {1.0, 2.0}), ShapeError);
  CHECK_THROWS_AS(component_count(10, 8), ShapeError);
  CHECK(component_count(3, 0) == 1);
}

TEST_CASE("addressing is 1-based and checked") {
  const auto t = TensorObject::zeros(2, {V::Up});
  CHECK_THROWS_AS(t({0}), AddressingError);
  CHECK_THROWS_AS(t({3}), AddressingError);
  CHECK_THROWS_AS(t({1, 1}), AddressingError);
  CHECK_THROWS_AS(t.slot(1), AddressingError);
}

TEST_CASE("scalar objects") {
  const auto s = TensorObject::scalar(2.5);
  CHECK(s.rank() == 0);
  CHECK(s.value() == 2.5);
  CHECK_THROWS(TensorObject::zeros(3, {V::Up}).value());
}

TEST_CASE("count gives the (m, n) rank") {
  const auto t = TensorObject::zeros(2, {V::Down, V::Up, V::Down});
  CHECK(t.count(V::Down) == 2);
  CHECK(t.count(V::Up) == 1);
}

TEST_CASE("add requires matching signature") {
  const auto a = TensorObject::zeros(3, {V::Up});
  CHECK_THROWS_AS(add(a, TensorObject::zeros(3, {V::Down})), ShapeError);
  CHECK_THROWS_AS(add(a, TensorObject::zeros(2, {V::Up})), ShapeError);
  CHECK_THROWS_AS(add(a, a.with_weight(1)), ShapeError);
}

TEST_CASE("add, subtract and scale act componentwise") {
  oracle::Rng rng(1);
  const auto a = oracle::random_tensor(rng, 3, {V::Up, V::Down});
  const auto b = oracle::random_tensor(rng, 3, {V::Up, V::Down});
  const auto s = add(a, b);
  const auto d = subtract(a, b);
  const auto k = scale(a, -2.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(s.components()[i] == a.components()[i] + b.components()[i]);
    CHECK(d.components()[i] == a.components()[i] - b.components()[i]);
    CHECK(k.components()[i] == -2.0 * a.components()[i]);
  }
}

TEST_CASE("outer product concatenates slots and adds weights") {
  oracle::Rng rng(2);
  const auto a = oracle::random_tensor(rng, 3, {V::Down}, -1);
  const auto b = oracle::random_tensor(rng, 3, {V::Up, V::Down}, 2);
  const auto p = outer_product(a, b);
  CHECK(p.slots() == std::vector<V>{V::Down, V::Up, V::Down});
  CHECK(p.weight() == 1);
  CHECK(p({2, 3, 1}) == a({2}) * b({3, 1}));
  CHECK_THROWS_AS(outer_product(a, TensorObject::zeros(2, {V::Up})), ShapeError);
}

TEST_CASE("contract sums a mixed pair") {
  oracle::Rng rng(3);
  const auto t = oracle::random_tensor(rng, 3, {V::Down, V::Up, V::Down}, 1);
  const auto c = contract(t, 1, 2);
  CHECK(c.slots() == std::vector<V>{V::Down});
  CHECK(c.weight() == 1);
  for (int r = 1; r <= 3; ++r) {
    double sum = 0;
    for (int m = 1; m <= 3; ++m) sum += t({r, m, m});
    CHECK(c({r}) == doctest::Approx(sum).epsilon(1e-15));
  }
  CHECK_THROWS_AS(contract(t, 0, 2), ConventionError);
  CHECK_THROWS_AS(contract(t, 1, 1), AddressingError);
  CHECK_THROWS_AS(contract(t, 1, 5), AddressingError);
}

TEST_CASE("swap_slots only exchanges equal variances") {
  oracle::Rng rng(4);
  const auto t = oracle::random_tensor(rng, 3, {V::Down, V::Up, V::Down});
  const auto s = swap_slots(t, 0, 2);
  CHECK(s({1, 2, 3}) == t({3, 2, 1}));
  CHECK_THROWS_AS(swap_slots(t, 0, 1), ConventionError);
}

TEST_CASE("symmetry classification") {
  const auto sym = TensorObject::generate(3, {V::Down, V::Down}, 0,
                                          [](const MultiIndex& i) { return i[0] + i[1]; });
  const auto anti = TensorObject::generate(3, {V::Down, V::Down}, 0,
                                           [](const MultiIndex& i) { return i[0] - i[1]; });
  const auto neither = TensorObject::generate(3, {V::Down, V::Down}, 0,
                                              [](const MultiIndex& i) { return i[0]; });
  CHECK(symmetry_check(sym, 0, 1) == Symmetry::Symmetric);
  CHECK(symmetry_check(anti, 0, 1) == Symmetry::Antisymmetric);
  CHECK(symmetry_check(neither, 0, 1) == Symmetry::Neither);
  CHECK(symmetry_check(TensorObject::zeros(3, {V::Up, V::Up}), 0, 1) == Symmetry::Symmetric);
  CHECK(symmetry_check(symmetrize(neither, 0, 1), 0, 1) == Symmetry::Symmetric);
  CHECK(max_abs(symmetrize(anti, 0, 1)) == 0.0);
}

TEST_CASE("serial and parallel kernels are bit-identical") {
  oracle::Rng rng(5);
  const auto a = oracle::random_tensor(rng, 8, {V::Up, V::Down});
  const auto b = oracle::random_tensor(rng, 8, {V::Up, V::Down});
  const auto ps = outer_product(a, b, Execution::Serial);
  const auto pp = outer_product(a, b, Execution::Parallel);
  CHECK(ps == pp);
  CHECK(contract(ps, 0, 3, Execution::Serial) == contract(ps, 0, 3, Execution::Parallel));
}

TEST_CASE("next_index walks every tuple once") {
  MultiIndex idx(3, 1);
  int n = 1;
  while (next_index(idx, 4)) ++n;
  CHECK(n == 64);
  CHECK(idx == MultiIndex{1, 1, 1});
}
