#include "mwis/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <omp.h>

#include "mwis/generator.hpp"

namespace mwis {

double weight_error_rate(Weight w, Weight w_optimum) {
  if (!(w_optimum > 0.0)) throw Error(Errc::ZeroOptimum, "optimum weight must be positive");
  return (w - w_optimum) / w_optimum * 100.0;
}

double graph_density(std::size_t node_count, std::size_t edge_count) {
  if (node_count < 2) return 0.0;
  return double(edge_count) / (double(node_count) * double(node_count - 1) / 2.0);
}

namespace {

AlgorithmRun run_one(const WeightedGraph& g, Algorithm a, double budget) {
  AlgorithmRun out;
  out.requested = true;
  try {
    auto r = run_algorithm(g, a, SolveControl::with_budget(budget));
    if (!r.verified_independent)
      throw std::logic_error(std::string(to_string(a)) + " returned a dependent set");
    out.total_weight = r.solution.total_weight;
    out.runtime_seconds = r.runtime_seconds;
  } catch (const Error& e) {
    if (e.code() != Errc::Timeout) throw;
    out.timed_out = true;
    out.runtime_seconds = budget;
  }
  return out;
}

}  // namespace

std::vector<BenchRecord> run_benchmark(std::span<const WeightedGraph> graphs,
                                       std::span<const Algorithm> algorithms,
                                       const BenchOptions& opts) {
  if (graphs.empty()) return {};
  const bool has_baseline = std::any_of(algorithms.begin(), algorithms.end(),
                                        [](Algorithm a) { return is_exact(a); });
  if (!has_baseline) throw Error(Errc::MissingBaseline, "A1 or A2 is required for error rates");

  std::vector<std::size_t> order(graphs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& a = graphs[x];
    const auto& b = graphs[y];
    if (a.node_count() != b.node_count()) return a.node_count() < b.node_count();
    return a.edge_count() < b.edge_count();
  });

  std::vector<BenchRecord> records(graphs.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& g = graphs[order[i]];
    records[i].test_id = i + 1;
    records[i].edge_count = g.edge_count();
    records[i].node_count = g.node_count();
    records[i].density = graph_density(g.node_count(), g.edge_count());
  }

  const auto jobs = static_cast<std::int64_t>(graphs.size() * algorithms.size());
  const int threads = opts.execution == Execution::Parallel ? available_threads() : 1;
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(jobs));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t j = 0; j < jobs; ++j) {
    const auto row = static_cast<std::size_t>(j) / algorithms.size();
    const auto a = algorithms[static_cast<std::size_t>(j) % algorithms.size()];
    try {
      records[row].run(a) = run_one(graphs[order[row]], a, opts.per_instance_budget);
    } catch (...) {
      failures[static_cast<std::size_t>(j)] = std::current_exception();
    }
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  for (auto& rec : records) {
    std::optional<Weight> optimum = rec.run(Algorithm::A1).total_weight;
    if (!optimum) optimum = rec.run(Algorithm::A2).total_weight;
    if (!optimum || !(*optimum > 0.0)) continue;
    for (auto& run : rec.runs) {
      if (!run.total_weight) continue;
      run.error_rate = weight_error_rate(*run.total_weight, *optimum);
      run.abs_error_rate = std::abs(*run.error_rate);
    }
  }
  return records;
}

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "test_id,edges,nodes,density";
  for (auto a : kAllAlgorithms) out << ',' << to_string(a) << "_weight," << to_string(a) << "_runtime";
  for (auto a : kAllAlgorithms) out << ',' << to_string(a) << "_error_pct";
  for (auto a : kAllAlgorithms) out << ',' << to_string(a) << "_abs_error_pct";
  out << '\n';
  for (const auto& r : records) {
    out << r.test_id << ',' << r.edge_count << ',' << r.node_count << ',' << fixed6(r.density);
    for (const auto& run : r.runs) {
      out << ',';
      if (run.total_weight) out << fixed6(*run.total_weight);
      out << ',';
      if (run.timed_out)
        out << "TIMEOUT";
      else if (run.requested)
        out << fixed6(run.runtime_seconds);
    }
    for (const auto& run : r.runs) {
      out << ',';
      if (run.error_rate) out << fixed6(*run.error_rate);
    }
    for (const auto& run : r.runs) {
      out << ',';
      if (run.abs_error_rate) out << fixed6(*run.abs_error_rate);
    }
    out << '\n';
  }
}

namespace {

constexpr SuiteSize kReferenceSuite[] = {
    {6, 5},      {9, 5},      {29, 12},    {29, 14},    {41, 17},    {44, 17},    {69, 17},
    {52, 18},    {6, 6},      {0, 20},     {8, 25},     {50, 26},    {101, 26},   {115, 27},
    {147, 28},   {155, 30},   {135, 31},   {198, 31},   {325, 34},   {216, 36},   {264, 39},
    {313, 39},   {336, 43},   {388, 45},   {425, 46},   {583, 53},   {465, 54},   {707, 56},
    {726, 59},   {726, 59},   {723, 61},   {840, 63},   {980, 67},   {1238, 79},  {1387, 89},
    {1387, 89},  {1387, 89},  {2184, 110}, {2184, 110}, {3108, 126}, {3108, 126}, {4718, 161},
    {4718, 161},
};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::span<const SuiteSize> reference_suite_sizes() { return kReferenceSuite; }

std::vector<WeightedGraph> build_reference_suite(std::uint64_t seed, Weight weight_low,
                                                 Weight weight_high) {
  std::vector<WeightedGraph> out;
  std::uint64_t i = 0;
  for (auto s : kReferenceSuite)
    out.push_back(generate_graph_with_edges(s.nodes, s.edges, weight_low, weight_high,
                                            splitmix(seed + i++)));
  return out;
}

}  // namespace mwis
