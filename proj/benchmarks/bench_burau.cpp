#include <benchmark/benchmark.h>

#include <complex>

#include "knotqc/burau.hpp"

using namespace knotqc;

namespace {

void BM_BurauSymbolic(benchmark::State& state) {
  const auto b = random_braid(4, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(burau_symbolic(b));
}

void BM_BurauNumeric(benchmark::State& state) {
  const auto b = random_braid(static_cast<int>(state.range(0)), 50, 3);
  const std::complex<double> t = std::polar(1.0, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(burau_numeric(b, t));
}

}  // namespace

BENCHMARK(BM_BurauSymbolic)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BurauNumeric)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
