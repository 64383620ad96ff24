// One settlement DP step, serial scatter vs OpenMP gather.

#include <benchmark/benchmark.h>

#include "forklab/settlement_dp.hpp"

using namespace forklab;

namespace {

DpParams params(int K) {
  DpParams p;
  p.alpha = 0.3;
  p.p_h = 0.5;
  p.k = K;
  return p;
}

// A matrix a few dozen steps in, so most cells carry mass.
template <class Step>
void run(benchmark::State& state, Step step) {
  const int K = static_cast<int>(state.range(0));
  const DpParams p = params(K);
  ProbMatrix<DpReal> a = init_matrix<DpReal>(p, K, K), b(K, K);
  for (int i = 0; i < 40; ++i) {
    step_serial(a, b, p);
    std::swap(a, b);
  }
  for (auto _ : state) {
    step(a, b, p);
    benchmark::DoNotOptimize(b.at(0, 0));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(K + 1) * (2 * K + 1));
}

void BM_StepSerial(benchmark::State& state) {
  run(state, [](const auto& in, auto& out, const DpParams& p) { step_serial(in, out, p); });
}
void BM_StepParallel(benchmark::State& state) {
  run(state, [](const auto& in, auto& out, const DpParams& p) { step_parallel(in, out, p); });
}

}  // namespace

BENCHMARK(BM_StepSerial)->Arg(100)->Arg(300)->Arg(500);
BENCHMARK(BM_StepParallel)->Arg(100)->Arg(300)->Arg(500);

BENCHMARK_MAIN();
