// Truncated series product, serial reference vs the OpenMP kernel.

#include <benchmark/benchmark.h>

#include "forklab/analytic.hpp"
#include "forklab/series.hpp"

using namespace forklab;

namespace {

template <class Mul>
void run(benchmark::State& state, Mul mul) {
  const std::size_t N = static_cast<std::size_t>(state.range(0));
  const PowerSeries D = gf_descent(0.3, N);
  const PowerSeries A = gf_ascent(0.3, N);
  for (auto _ : state) {
    PowerSeries P = mul(D, A);
    benchmark::DoNotOptimize(P[N]);
  }
  state.SetComplexityN(state.range(0));
}

void BM_MultiplySerial(benchmark::State& state) { run(state, multiply_serial); }
void BM_MultiplyParallel(benchmark::State& state) {
  run(state, [](const PowerSeries& a, const PowerSeries& b) { return multiply(a, b); });
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_MultiplyParallel)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();
