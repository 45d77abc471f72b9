#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "tensoralg/einsum.hpp"
#include "tensoralg/symbols.hpp"

using namespace tensoralg;
using namespace tensoralg::einsum;
using V = Variance;
using Kind = ExpressionError::Kind;

namespace {

Bindings sample(oracle::Rng& rng) {
  return {{"a", oracle::random_tensor(rng, 3, {V::Down})},
          {"x", oracle::random_tensor(rng, 3, {V::Up})},
          {"y", oracle::random_tensor(rng, 3, {V::Up})},
          {"m", oracle::random_tensor(rng, 3, {V::Up, V::Down})},
          {"g", oracle::random_tensor(rng, 3, {V::Down, V::Down})},
          {"e", levi_civita_symbol(3, LeviCivitaVariance::AllDown)}};
}

Kind kind_of(std::string_view text, const Bindings& b, IndexMode mode = IndexMode::Strict) {
  try {
    evaluate(text, b, mode);
  } catch (const ExpressionError& e) {
    return e.kind();
  }
  FAIL("expression was accepted: " << text);
  return Kind::BindingMismatch;
}

double rel_diff(const TensorObject& a, const TensorObject& b) {
  return max_abs_difference(a, b) / std::max(1.0, max_abs(b));
}

}  // namespace

TEST_CASE("parse builds terms and factors") {
  const auto s = parse("w^r = 2.5*m^r_s x^s - x^r");
  REQUIRE(s.target);
  CHECK(s.target->name == "w");
  REQUIRE(s.terms.size() == 2);
  CHECK(s.terms[0].coefficient == 2.5);
  CHECK(s.terms[1].coefficient == -1.0);
  REQUIRE(s.terms[0].factors.size() == 2);
  CHECK(s.terms[0].factors[0].indices ==
        std::vector<IndexSpec>{{'r', V::Up}, {'s', V::Down}});
  CHECK(s.terms[0].factors[1].position == 16);
}

TEST_CASE("grouped indices and whitespace") {
  const auto a = parse("e_{rst}x^r");
  const auto b = parse("e _ { r s t } x ^ r");
  CHECK(format(a) == format(b));
  CHECK(a.terms[0].factors[0].indices.size() == 3);
}

TEST_CASE("format round trips") {
  for (const char* text : {"a_r x^r", "w_{mn}^{rs} = e_{mnp} e_{rsq} - 0.5*g_{mn} d^{rs}",
                           "-x^1", "t^{ab}_c = u^a_c v^b"}) {
    const auto s = parse(text);
    CHECK(format(parse(format(s))) == format(s));
  }
}

TEST_CASE("syntax errors carry a position") {
  auto pos = [](std::string_view text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("parsed: " << text);
    return 0;
  };
  CHECK(pos("") == 0);
  CHECK(pos("a_") == 2);
  CHECK(pos("a_{}") == 3);
  CHECK(pos("a_r +") == 5);
  CHECK(pos("a_r x^0") == 6);
  CHECK(pos("a_r * x^r") == 4);
  CHECK_THROWS_AS(parse("a_{r"), ParseError);
  CHECK_THROWS_AS(parse("a"), ParseError);
}

TEST_CASE("a_r x^r with a = (1, 2, 3), x = (1, 1, 1)") {
  const Bindings b = {{"a", TensorObject(3, {V::Down}, 0, {1, 2, 3})},
                      {"x", TensorObject(3, {V::Up}, 0, {1, 1, 1})}};
  CHECK(evaluate("a_r x^r", b).value() == 6.0);
}

TEST_CASE("mixed product via stacked indices") {
  const Bindings b = {{"e", levi_civita_symbol(3, LeviCivitaVariance::AllDown)},
                      {"x", TensorObject(3, {V::Up, V::Down}, 0, {1, 0, 0, 0, 1, 0, 0, 0, 1})}};
  const auto t = evaluate("e_{rst} x^r_1 x^s_2 x^t_3", b);
  CHECK(t.value() == 1.0);
  CHECK(t.weight() == -1);
  CHECK(evaluate("e_{rst} x_1^r x_2^s x_3^t", b).value() == 1.0);
}

TEST_CASE("UTF-8 names") {
  oracle::Rng rng(51);
  const auto x = oracle::random_tensor(rng, 3, {V::Up});
  const Bindings b = {{"δ", kronecker(3, KroneckerKind::Mixed)}, {"x", x}};
  CHECK(max_abs_difference(evaluate("w^r = δ^r_s x^s", b), x) == 0.0);
}

TEST_CASE("convention violations") {
  oracle::Rng rng(52);
  const auto b = sample(rng);
  CHECK(kind_of("a_r x^r y^r", b) == Kind::RepeatedIndex);
  CHECK(kind_of("g_{rs} m^r_r", b) == Kind::RepeatedIndex);
  CHECK(kind_of("x^r y^r", b) == Kind::VarianceClash);
  CHECK(kind_of("a_r a_r", b) == Kind::VarianceClash);
  CHECK(kind_of("w^r = x^r + m^s_s", b) == Kind::FreeIndexMismatch);
  CHECK(kind_of("w^r = x^r + y^s", b) == Kind::FreeIndexMismatch);
  CHECK(kind_of("w_r = x^r", b) == Kind::VarianceMismatch);
  CHECK(kind_of("a^r x^r", b) == Kind::VarianceMismatch);
  CHECK(kind_of("q_r x^r", b) == Kind::UnboundName);
  CHECK(kind_of("m^r x_r", b) == Kind::ArityMismatch);
  CHECK(kind_of("x^r", b) == Kind::TargetLayout);
  CHECK(kind_of("w^{rr} = x^r", b) == Kind::TargetLayout);
  CHECK(kind_of("w^1 = x^1", b) == Kind::TargetLayout);
  CHECK(kind_of("a_4", b) == Kind::FixedIndexRange);
  CHECK(kind_of("w_{rst} = e_{rst} + a_1", b) == Kind::FreeIndexMismatch);
  CHECK(kind_of("e_{123} + a_1", b) == Kind::WeightMismatch);
  Bindings mixed_dim = b;
  mixed_dim.insert_or_assign("z", oracle::random_tensor(rng, 2, {V::Up}));
  CHECK(kind_of("a_r z^r", mixed_dim) == Kind::DimensionMismatch);
}

TEST_CASE("orthogonal mode ignores variance") {
  oracle::Rng rng(53);
  const auto b = sample(rng);
  const double strict = evaluate("a_r x^r", b).value();
  CHECK(evaluate("a_r x_r", b, IndexMode::Orthogonal).value() == strict);
  CHECK(evaluate("x^r y^r", b, IndexMode::Orthogonal).value() ==
        doctest::Approx(evaluate("x^r y^r", b, IndexMode::Orthogonal).value()));
  CHECK(kind_of("a_r x^r y^r", b, IndexMode::Orthogonal) == Kind::RepeatedIndex);
}

TEST_CASE("pinned digits select components") {
  oracle::Rng rng(54);
  const auto b = sample(rng);
  CHECK(evaluate("m^2_3", b).value() == b.at("m")({2, 3}));
  const auto col = evaluate("w^r = m^r_2", b);
  for (int r = 1; r <= 3; ++r) CHECK(col({r}) == b.at("m")({r, 2}));
}

TEST_CASE("trace within one factor") {
  oracle::Rng rng(55);
  const auto b = sample(rng);
  const auto& m = b.at("m");
  CHECK(evaluate("m^r_r", b).value() == doctest::Approx(m({1, 1}) + m({2, 2}) + m({3, 3})));
}

TEST_CASE("target layout permutes the result") {
  oracle::Rng rng(56);
  const auto b = sample(rng);
  const auto t = evaluate("w_{sr} = g_{rs}", b);
  CHECK(t({1, 2}) == b.at("g")({2, 1}));
}

TEST_CASE("random expressions match the nested-loop oracle") {
  oracle::Rng rng(57);
  for (int k = 0; k < 100; ++k) {
    Bindings b;
    const auto e = oracle::random_expression(rng, b);
    const std::string text = oracle::render(e);
    CAPTURE(text);
    const auto got = evaluate(text, b);
    const auto ref = oracle::evaluate(e, b);
    CHECK(got.slots() == ref.slots());
    CHECK(rel_diff(got, ref) <= 1e-12);
  }
}

TEST_CASE("renaming dummies is bit-identical") {
  oracle::Rng rng(58);
  for (int k = 0; k < 50; ++k) {
    Bindings b;
    const auto e = oracle::random_expression(rng, b);
    const auto renamed = oracle::rename_dummies(e, rng);
    CAPTURE(oracle::render(e));
    CHECK(evaluate(oracle::render(e), b) == evaluate(oracle::render(renamed), b));
  }
}

TEST_CASE("contraction order changes cost, not value") {
  oracle::Rng rng(59);
  const Bindings b = {{"p", oracle::random_tensor(rng, 6, {V::Up, V::Down})},
                      {"q", oracle::random_tensor(rng, 6, {V::Up, V::Down})},
                      {"v", oracle::random_tensor(rng, 6, {V::Up})}};
  const auto plan = validate(parse("w^r = p^r_s q^s_t v^t"), signatures_of(b));
  const auto ordered = order_contractions(plan);
  CHECK(ordered.cost() < plan.cost());
  CHECK(ordered.cost() <= ordered.naive_cost());
  CHECK(rel_diff(execute(ordered, b), execute(plan, b)) <= 1e-12);
}

TEST_CASE("serial and parallel execution agree bit for bit") {
  oracle::Rng rng(60);
  const Bindings b = {{"p", oracle::random_tensor(rng, 9, {V::Up, V::Down, V::Down})},
                      {"q", oracle::random_tensor(rng, 9, {V::Up, V::Up, V::Down})}};
  const auto plan = order_contractions(validate(parse("w^{ra}_{bt} = p^r_{sb} q^{sa}_t"),
                                                signatures_of(b)));
  CHECK(execute(plan, b, Execution::Serial) == execute(plan, b, Execution::Parallel));
}

TEST_CASE("execute checks bindings against the plan") {
  oracle::Rng rng(61);
  auto b = sample(rng);
  const auto plan = validate(parse("a_r x^r"), signatures_of(b));
  b.insert_or_assign("x", oracle::random_tensor(rng, 3, {V::Down}));
  try {
    execute(plan, b);
    FAIL("accepted");
  } catch (const ExpressionError& e) {
    CHECK(e.kind() == Kind::BindingMismatch);
  }
}
