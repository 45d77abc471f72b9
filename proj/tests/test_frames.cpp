#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "tensoralg/determinants.hpp"
#include "tensoralg/frames.hpp"
#include "tensoralg/symbols.hpp"

using namespace tensoralg;
using V = Variance;

namespace {

Frame random_frame(oracle::Rng& rng, int d) {
  return frame_from_matrix(
      oracle::from_matrix(oracle::random_invertible(rng, d), V::Up, V::Down));
}

std::vector<std::vector<V>> layouts_up_to(std::size_t rank) {
  std::vector<std::vector<V>> out{{}};
  for (std::size_t r = 1; r <= rank; ++r) {
    for (unsigned bits = 0; bits < (1u << r); ++bits) {
      std::vector<V> s;
      for (std::size_t k = 0; k < r; ++k) s.push_back((bits >> k) & 1u ? V::Down : V::Up);
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("frame caches gamma and det gamma") {
  oracle::Rng rng(21);
  const auto m = oracle::random_invertible(rng, 3);
  const Frame f = frame_from_matrix(oracle::from_matrix(m, V::Up, V::Down));
  const auto g = oracle::gauss_jordan_inverse(m);
  CHECK(oracle::max_diff(oracle::to_matrix(f.gamma()), g) < 1e-12);
  CHECK(std::abs(f.det_gamma() - oracle::cofactor_det(g)) < 1e-12);
  CHECK(oracle::max_diff(oracle::to_matrix(f.inverse().c()), g) < 1e-12);
}

TEST_CASE("singular frames are rejected") {
  const oracle::Matrix m = {{1, 2}, {2, 4}};
  CHECK_THROWS_AS(frame_from_matrix(oracle::from_matrix(m, V::Up, V::Down)), SingularError);
  CHECK_THROWS_AS(frame_from_matrix(TensorObject::zeros(2, {V::Down, V::Up})), ShapeError);
}

TEST_CASE("transform matches the direct multi-sum") {
  oracle::Rng rng(22);
  for (int d = 2; d <= 4; ++d) {
    for (const auto& slots : layouts_up_to(3)) {
      const Frame f = random_frame(rng, d);
      const int weight = rng.integer(-2, 2);
      const auto t = oracle::random_tensor(rng, d, slots, weight);
      const auto ref = oracle::transform_by_sum(t, oracle::to_matrix(f.c()), oracle::to_matrix(f.gamma()),
                                                f.det_gamma());
      const auto got = transform(t, f);
      CHECK(got.same_signature(t));
      CHECK(max_abs_difference(got, ref) <= 1e-9 * std::max(1.0, max_abs(ref)));
    }
  }
}

TEST_CASE("serial and parallel transforms agree bit for bit") {
  oracle::Rng rng(23);
  const Frame f = random_frame(rng, 7);
  const auto t = oracle::random_tensor(rng, 7, {V::Up, V::Down, V::Down, V::Up});
  CHECK(transform(t, f, Execution::Serial) == transform(t, f, Execution::Parallel));
}

TEST_CASE("scalar and trace are invariant") {
  oracle::Rng rng(24);
  for (int k = 0; k < 20; ++k) {
    const Frame f = random_frame(rng, 3);
    const auto a = oracle::random_tensor(rng, 3, {V::Down});
    const auto x = oracle::random_tensor(rng, 3, {V::Up});
    const auto s = contract(outer_product(x, a), 0, 1);
    const auto sb = contract(outer_product(transform(x, f), transform(a, f)), 0, 1);
    CHECK(std::abs(s.value() - sb.value()) < 1e-9);
    const auto m = oracle::random_tensor(rng, 3, {V::Up, V::Down});
    CHECK(std::abs(contract(m, 0, 1).value() - contract(transform(m, f), 0, 1).value()) < 1e-9);
  }
}

TEST_CASE("delta tensors under a scaling frame") {
  const oracle::Matrix c = {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const Frame f = frame_from_matrix(oracle::from_matrix(c, V::Up, V::Down));
  const auto mixed = kronecker(3, KroneckerKind::Mixed);
  CHECK(max_abs_difference(transform(mixed, f), mixed) < 1e-12);
  const auto lower = transform(kronecker(3, KroneckerKind::LowerLower), f);
  CHECK(std::abs(lower({1, 1}) - 0.25) < 1e-12);
  CHECK(std::abs(lower({2, 2}) - 1.0) < 1e-12);
  CHECK(std::abs(lower({3, 3}) - 1.0) < 1e-12);
}

TEST_CASE("levi-civita symbols are fixed by the weighted law") {
  oracle::Rng rng(25);
  for (int k = 0; k < 20; ++k) {
    const Frame f = random_frame(rng, 3);
    for (auto v : {LeviCivitaVariance::AllDown, LeviCivitaVariance::AllUp}) {
      const auto e = levi_civita_symbol(3, v);
      CHECK(max_abs_difference(transform(e, f), e) < 1e-9);
    }
  }
}

TEST_CASE("transform commutes with algebra") {
  oracle::Rng rng(26);
  const Frame f = random_frame(rng, 3);
  const auto a = oracle::random_tensor(rng, 3, {V::Up, V::Down}, 1);
  const auto b = oracle::random_tensor(rng, 3, {V::Up, V::Down}, 1);
  const auto x = oracle::random_tensor(rng, 3, {V::Down}, -2);
  CHECK(max_abs_difference(transform(add(a, b), f), add(transform(a, f), transform(b, f))) < 1e-9);
  const auto p = outer_product(a, x);
  CHECK(p.weight() == -1);
  CHECK(max_abs_difference(transform(p, f), outer_product(transform(a, f), transform(x, f))) <
        1e-9);
  CHECK(max_abs_difference(transform(contract(p, 0, 1), f), contract(transform(p, f), 0, 1)) <
        1e-9);
}

TEST_CASE("compose and inverse") {
  oracle::Rng rng(27);
  const Frame f1 = random_frame(rng, 3);
  const Frame f2 = random_frame(rng, 3);
  const auto t = oracle::random_tensor(rng, 3, {V::Up, V::Down, V::Down}, 1);
  CHECK(max_abs_difference(transform(t, compose(f1, f2)), transform(transform(t, f1), f2)) <
        1e-9);
  CHECK(max_abs_difference(transform(transform(t, f1), f1.inverse()), t) < 1e-9);
  CHECK(weight_factor(2.0, -2) == 0.25);
  CHECK(weight_factor(2.0, 3) == 8.0);
}

TEST_CASE("basis round trip") {
  oracle::Rng rng(28);
  const Frame f = random_frame(rng, 3);
  std::vector<TensorObject> basis;
  for (int k = 1; k <= 3; ++k) {
    basis.push_back(TensorObject::generate(3, {V::Up}, 0, [k](const MultiIndex& i) {
      return i[0] == k ? 1.0 : 0.0;
    }));
  }
  const auto moved = transform_basis(f, basis);
  const auto back = restore_basis(f, moved);
  for (std::size_t k = 0; k < 3; ++k) CHECK(max_abs_difference(back[k], basis[k]) < 1e-12);
  // ē_r = γ^s_r e_s
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 3; ++s) {
      CHECK(std::abs(moved[static_cast<std::size_t>(r - 1)]({s}) - f.gamma()({s, r})) < 1e-12);
    }
  }
}

TEST_CASE("verify_transform_law") {
  oracle::Rng rng(29);
  const Frame f = random_frame(rng, 3);
  const auto t = oracle::random_tensor(rng, 3, {V::Down, V::Up}, -1);
  const auto good = transform(t, f);
  CHECK(verify_transform_law(t, good, f, -1));
  CHECK_FALSE(verify_transform_law(t, good, f, 0));
  CHECK_FALSE(verify_transform_law(t, scale(good, 1.001), f, -1));
}
