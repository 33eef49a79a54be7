#include <benchmark/benchmark.h>

#include "fabric/cost_model.hpp"
#include "fabric/critical_path.hpp"
#include "fabric/fixtures.hpp"
#include "fabric/transforms.hpp"

namespace {

using namespace fabric;

CircuitGraph workload(std::int64_t which) {
  return which == 0 ? fixtures::table3_mult8() : fixtures::array_mult(static_cast<std::size_t>(which));
}

void BM_Estimate(benchmark::State& state) {
  const CircuitGraph g = workload(state.range(0));
  const Profile p = paper_default_profile();
  for (auto _ : state) benchmark::DoNotOptimize(estimate(g, p.fabric, p.costs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.operators.size()));
}
BENCHMARK(BM_Estimate)->Arg(0)->Arg(16)->Arg(32);

void BM_CriticalPath(benchmark::State& state) {
  const CircuitGraph g = workload(state.range(0));
  const auto method = static_cast<CpMethod>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(critical_path(g, method));
  state.SetLabel(std::string(method_name(method)));
}
BENCHMARK(BM_CriticalPath)->ArgsProduct({{0, 16}, {0, 1, 2}});

void BM_Canonicalize(benchmark::State& state) {
  const CircuitGraph g = workload(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(g));
}
BENCHMARK(BM_Canonicalize)->Arg(0)->Arg(16);

void BM_Sectionize(benchmark::State& state) {
  const CircuitGraph g = workload(state.range(0));
  const CostTable costs = paper_default_profile().costs;
  for (auto _ : state) benchmark::DoNotOptimize(sectionize(g, 2048, costs));
}
BENCHMARK(BM_Sectionize)->Arg(0)->Arg(16);

}  // namespace
