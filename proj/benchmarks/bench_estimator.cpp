#include <benchmark/benchmark.h>

#include "knotqc/estimator.hpp"

using namespace knotqc;

namespace {

void BM_JonesEstimate(benchmark::State& state) {
  const BraidWord fig8(3, {1, -2, 1, -2});
  const double eps = 1.0 / static_cast<double>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(jones_estimate(fig8, eps, 0.05, seed++));
  state.counters["samples"] = static_cast<double>(estimator_samples(eps, 0.05));
}

}  // namespace

BENCHMARK(BM_JonesEstimate)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
