#include <benchmark/benchmark.h>

#include "fabric/fixtures.hpp"
#include "fabric/ir_text.hpp"

namespace {

using namespace fabric;

void BM_Print(benchmark::State& state) {
  const CircuitGraph g = fixtures::array_mult(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(print(g));
}
BENCHMARK(BM_Print)->Arg(8)->Arg(16);

void BM_Parse(benchmark::State& state) {
  const std::string text = print(fixtures::array_mult(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parse(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Parse)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
