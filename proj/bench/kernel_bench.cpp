// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "mwis/bench.hpp"
#include "mwis/detail/bitgraph.hpp"
#include "mwis/detail/decompose_kernels.hpp"
#include "mwis/detail/greedy_kernels.hpp"
#include "mwis/generator.hpp"
#include "mwis/oracle.hpp"

using namespace mwis;

namespace {

WeightedGraph graph(benchmark::State& state, double density) {
  return generate_graph({std::size_t(state.range(0)), density, 0.1, 100.0, 7});
}

template <auto Pick>
void BM_GreedyPick(benchmark::State& state) {
  auto bg = detail::BitGraph::from(graph(state, 0.37));
  auto rest = bg.full_mask();
  for (auto _ : state) benchmark::DoNotOptimize(Pick(bg, rest, Selector::Gwmin2));
}

template <auto Diameter>
void BM_Diameter(benchmark::State& state) {
  auto bg = detail::BitGraph::from(graph(state, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(Diameter(bg));
}

template <Execution E>
void BM_OracleScan(benchmark::State& state) {
  auto g = graph(state, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_mwis(g, {}, E));
}

template <Execution E>
void BM_Harness(benchmark::State& state) {
  auto suite = build_reference_suite(1);
  suite.resize(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_benchmark(suite, kAllAlgorithms, {600.0, E}));
}

}  // namespace

BENCHMARK(BM_GreedyPick<detail::greedy_pick_serial>)->Name("greedy_pick/serial")->Arg(161)->Arg(1024);
BENCHMARK(BM_GreedyPick<detail::greedy_pick_parallel>)->Name("greedy_pick/parallel")->Arg(161)->Arg(1024);
BENCHMARK(BM_Diameter<detail::all_pairs_diameter_serial>)->Name("diameter/serial")->Arg(161)->Arg(600);
BENCHMARK(BM_Diameter<detail::all_pairs_diameter_parallel>)->Name("diameter/parallel")->Arg(161)->Arg(600);
BENCHMARK(BM_OracleScan<Execution::Serial>)->Name("oracle_scan/serial")->Arg(16)->Arg(20);
BENCHMARK(BM_OracleScan<Execution::Parallel>)->Name("oracle_scan/parallel")->Arg(16)->Arg(20);
BENCHMARK(BM_Harness<Execution::Serial>)->Name("harness/serial")->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Harness<Execution::Parallel>)->Name("harness/parallel")->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
