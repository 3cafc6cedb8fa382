#include <benchmark/benchmark.h>

#include "knotqc/anyon.hpp"

using namespace knotqc;

namespace {

void BM_ApplyBraid(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  const auto s = init_state(qubits);
  const auto b = random_braid(4 * qubits, 100, 7);
  for (auto _ : state) benchmark::DoNotOptimize(apply_braid(s, b));
  state.counters["dim"] = static_cast<double>(s.basis().dimension());
}

void BM_MarkovTrace(benchmark::State& state) {
  const auto b = random_braid(static_cast<int>(state.range(0)), 20, 9);
  for (auto _ : state) benchmark::DoNotOptimize(markov_trace(b));
}

}  // namespace

BENCHMARK(BM_ApplyBraid)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MarkovTrace)->DenseRange(3, 9, 3)->Unit(benchmark::kMicrosecond);
