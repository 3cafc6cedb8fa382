#include <benchmark/benchmark.h>

#include "knotqc/skein.hpp"

using namespace knotqc;

namespace {

LinkCode torus_code(int c) {
  return to_link_code(closure_to_diagram(BraidWord(2, std::vector<int>(static_cast<std::size_t>(c), 1))));
}

void run(benchmark::State& state, bool memo) {
  const auto code = torus_code(static_cast<int>(state.range(0)));
  SkeinBudget budget;
  budget.memo_enabled = memo;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    SkeinEngine engine(budget);
    benchmark::DoNotOptimize(engine.homfly(code));
    nodes = engine.last_stats().nodes;
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_SkeinMemo(benchmark::State& state) { run(state, true); }
void BM_SkeinPlain(benchmark::State& state) { run(state, false); }

void BM_HomflyRandom(benchmark::State& state) {
  const auto b = random_braid(4, static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(homfly_braid(b));
}

}  // namespace

BENCHMARK(BM_SkeinMemo)->DenseRange(4, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SkeinPlain)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomflyRandom)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
