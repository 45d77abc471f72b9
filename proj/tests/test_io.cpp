#include <doctest.h>

#include "tensoralg/io.hpp"

using namespace tensoralg;
using V = Variance;

TEST_CASE("tensor document round trip") {
  const auto doc = io::parse_json(
      R"({"dim": 2, "slots": ["up", "down"], "weight": -1, "components": [[1, 2], [3, 4.5]]})");
  const auto t = io::tensor_from_json(doc);
  CHECK(t.slots() == std::vector<V>{V::Up, V::Down});
  CHECK(t.weight() == -1);
  CHECK(t({2, 2}) == 4.5);
  CHECK(io::tensor_from_json(io::parse_json(io::write_tensor(t))) == t);
}

TEST_CASE("seventeen significant digits survive") {
  const TensorObject t(3, {V::Up}, 0, {0.1, 1.0 / 3.0, -2e-300});
  CHECK(io::tensor_from_json(io::parse_json(io::write_tensor(t))) == t);
}

TEST_CASE("rank zero is a bare number") {
  const auto text = io::write_tensor(TensorObject::scalar(6.0));
  CHECK(text.find("\"components\": 6") != std::string::npos);
  CHECK(io::tensor_from_json(io::parse_json(text)).value() == 6.0);
}

TEST_CASE("weight defaults to zero") {
  const auto t = io::tensor_from_json(
      io::parse_json(R"({"dim": 2, "slots": ["down"], "components": [1, 2]})"));
  CHECK(t.weight() == 0);
}

TEST_CASE("malformed documents") {
  for (const char* text : {
           R"({"dim": 2, "slots": ["up"], "components": [1, 2, 3]})",
           R"({"dim": 2, "slots": ["up", "up"], "components": [1, 2]})",
           R"({"dim": 2, "slots": ["up", "up"], "components": [[1, 2], [3]]})",
           R"({"dim": 2, "slots": ["sideways"], "components": [1, 2]})",
           R"({"slots": ["up"], "components": [1, 2]})",
           R"({"dim": 0, "slots": [], "components": 1})",
           R"({"dim": 2, "slots": ["up"], "components": [1, "x"]})",
           R"([1, 2])"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(io::tensor_from_json(io::parse_json(text)), DocumentError);
  }
  CHECK_THROWS_AS(io::parse_json("{"), DocumentError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), DocumentError);
}

TEST_CASE("non-finite components cannot be written") {
  const TensorObject t(2, {V::Up}, 0, {1.0, std::numeric_limits<double>::infinity()});
  CHECK_THROWS_AS(io::write_tensor(t), DocumentError);
}

TEST_CASE("frame, basis and metric documents") {
  const auto f = io::frame_from_json(io::parse_json(R"({"dim": 2, "c": [[2, 0], [0, 1]]})"));
  CHECK(f.gamma()({1, 1}) == 0.5);
  const auto basis =
      io::basis_from_json(io::parse_json(R"({"dim": 2, "vectors": [[1, 0], [1, 1]]})"));
  REQUIRE(basis.size() == 2);
  CHECK(basis[1]({2}) == 1.0);
  const auto m = io::metric_from_json(io::parse_json(
      R"({"dim": 2, "slots": ["down", "down"], "components": [[2, 0], [0, 3]]})"));
  CHECK(m.det_g() == doctest::Approx(6.0));
  CHECK_THROWS_AS(io::frame_from_json(io::parse_json(R"({"dim": 2, "c": [[1, 0]]})")),
                  DocumentError);
}

TEST_CASE("bindings documents") {
  const auto b = io::bindings_from_json(io::parse_json(R"({
    "a": {"dim": 3, "slots": ["down"], "components": [1, 2, 3]},
    "x": {"dim": 3, "slots": ["up"], "components": [1, 1, 1]}})"));
  CHECK(b.size() == 2);
  CHECK(einsum::evaluate("a_r x^r", b).value() == 6.0);
  const auto one = io::bindings_from_json(io::parse_json(
      R"({"name": "v", "dim": 2, "slots": ["up"], "components": [1, 2]})"));
  CHECK(one.contains("v"));
}
