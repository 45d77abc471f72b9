#include <doctest.h>

#include "tensoralg/core.hpp"
#include "tensoralg/einsum.hpp"
#include "tensoralg/symbols.hpp"

using namespace tensoralg;
using V = Variance;

namespace {

einsum::Bindings symbols3() {
  return {{"e", levi_civita_symbol(3, LeviCivitaVariance::AllDown)},
          {"E", levi_civita_symbol(3, LeviCivitaVariance::AllUp)},
          {"d", kronecker(3, KroneckerKind::Mixed)}};
}

}  // namespace

TEST_CASE("permutation sign") {
  const int even[] = {2, 3, 1};
  const int odd[] = {2, 1, 3};
  const int rep[] = {1, 1, 2};
  const int bad[] = {1, 4, 2};
  CHECK(permutation_sign(even, 3) == 1);
  CHECK(permutation_sign(odd, 3) == -1);
  CHECK(permutation_sign(rep, 3) == 0);
  CHECK_THROWS_AS(permutation_sign(bad, 3), AddressingError);
}

TEST_CASE("kronecker layouts") {
  CHECK(kronecker(3, KroneckerKind::Mixed).slots() == std::vector<V>{V::Up, V::Down});
  CHECK(kronecker(3, KroneckerKind::LowerLower).slots() == std::vector<V>{V::Down, V::Down});
  CHECK(kronecker(3, KroneckerKind::UpperUpper).slots() == std::vector<V>{V::Up, V::Up});
  const auto d = kronecker(4, KroneckerKind::Mixed);
  CHECK(d({2, 2}) == 1.0);
  CHECK(d({2, 3}) == 0.0);
}

TEST_CASE("levi-civita weights and antisymmetry") {
  const auto lo = levi_civita_symbol(3, LeviCivitaVariance::AllDown);
  const auto up = levi_civita_symbol(3, LeviCivitaVariance::AllUp);
  CHECK(lo.weight() == -1);
  CHECK(up.weight() == 1);
  CHECK(lo({1, 2, 3}) == 1.0);
  CHECK(lo({3, 2, 1}) == -1.0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      CHECK(symmetry_check(lo, i, j) == Symmetry::Antisymmetric);
    }
  }
  CHECK(levi_civita_symbol(4, LeviCivitaVariance::AllDown).size() == 256);
}

TEST_CASE("polynomial formula in dimension 3") {
  const auto e = levi_civita_symbol(3, LeviCivitaVariance::AllDown);
  MultiIndex i(3, 1);
  do {
    const int r = i[0], s = i[1], t = i[2];
    CHECK(e.at(i) == (s - r) * (t - r) * (t - s) / 2);
  } while (next_index(i, 3));
}

TEST_CASE("delta trace is the dimension") {
  CHECK(einsum::evaluate("d^r_r", symbols3()).value() == 3.0);
}

TEST_CASE("epsilon-delta identities hold exactly") {
  const auto b = symbols3();
  const auto one = einsum::evaluate("w_{mn}^{rs} = e_{mnp} E^{rsp}", b);
  const auto d = kronecker(3, KroneckerKind::Mixed);
  MultiIndex i(4, 1);
  do {
    const int m = i[0], n = i[1], r = i[2], s = i[3];
    const double rhs = d({r, m}) * d({s, n}) - d({s, m}) * d({r, n});
    CHECK(one.at(i) == rhs);
  } while (next_index(i, 3));

  const auto two = einsum::evaluate("w_m^r = e_{mnp} E^{rnp}", b);
  for (int m = 1; m <= 3; ++m) {
    for (int r = 1; r <= 3; ++r) CHECK(two({m, r}) == 2.0 * d({r, m}));
  }
  CHECK(einsum::evaluate("e_{mnp} E^{mnp}", b).value() == 6.0);
}
