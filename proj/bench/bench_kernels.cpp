#include <benchmark/benchmark.h>

#include <random>

#include "tensoralg/einsum.hpp"
#include "tensoralg/frames.hpp"

using namespace tensoralg;
using V = Variance;

namespace {

TensorObject random_tensor(std::mt19937_64& rng, int dim, std::vector<V> slots) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return TensorObject::generate(dim, std::move(slots), 0, [&](const MultiIndex&) { return u(rng); });
}

Frame random_frame(std::mt19937_64& rng, int dim) {
  auto c = random_tensor(rng, dim, {V::Up, V::Down});
  // diagonal dominance keeps it well conditioned
  std::vector<double> comps(c.components().begin(), c.components().end());
  for (int k = 0; k < dim; ++k) comps[static_cast<std::size_t>(k * dim + k)] += dim;
  return frame_from_matrix(TensorObject(dim, {V::Up, V::Down}, 0, std::move(comps)));
}

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_Transform(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int d = static_cast<int>(state.range(0));
  const Frame f = random_frame(rng, d);
  const auto t = random_tensor(rng, d, {V::Up, V::Down, V::Down});
  for (auto _ : state) benchmark::DoNotOptimize(transform(t, f, exec_of(state)));
}

void BM_OuterContract(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int d = static_cast<int>(state.range(0));
  const auto a = random_tensor(rng, d, {V::Up, V::Down});
  const auto b = random_tensor(rng, d, {V::Up, V::Down});
  for (auto _ : state) {
    const auto p = outer_product(a, b, exec_of(state));
    benchmark::DoNotOptimize(contract(p, 2, 1, exec_of(state)));
  }
}

void BM_Einsum(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int d = static_cast<int>(state.range(0));
  const einsum::Bindings b = {{"p", random_tensor(rng, d, {V::Up, V::Down, V::Down})},
                              {"q", random_tensor(rng, d, {V::Up, V::Up, V::Down})}};
  const auto plan = einsum::order_contractions(
      einsum::validate(einsum::parse("w^{ra}_{bt} = p^r_{sb} q^{sa}_t"), einsum::signatures_of(b)));
  for (auto _ : state) benchmark::DoNotOptimize(einsum::execute(plan, b, exec_of(state)));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int d : {8, 16, 24}) {
    b->Args({d, 0});
    b->Args({d, 1});
  }
  b->ArgNames({"dim", "parallel"});
}

}  // namespace

BENCHMARK(BM_Transform)->Apply(sizes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OuterContract)->Apply(sizes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Einsum)->Apply(sizes)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
