#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mwis/graph.hpp"
#include "mwis/parallel.hpp"
#include "mwis/result.hpp"

namespace mwis {

/// (w - w_optimum) / w_optimum * 100. Throws ZeroOptimum when w_optimum <= 0.
double weight_error_rate(Weight w, Weight w_optimum);

struct AlgorithmRun {
  bool requested = false;
  bool timed_out = false;
  std::optional<Weight> total_weight;
  double runtime_seconds = 0.0;
  std::optional<double> error_rate;      // signed percent
  std::optional<double> abs_error_rate;  // percent
};

struct BenchRecord {
  std::size_t test_id = 0;
  std::size_t edge_count = 0;
  std::size_t node_count = 0;
  double density = 0.0;
  std::array<AlgorithmRun, 8> runs{};

  AlgorithmRun& run(Algorithm a) { return runs[static_cast<std::size_t>(a)]; }
  const AlgorithmRun& run(Algorithm a) const { return runs[static_cast<std::size_t>(a)]; }
};

struct BenchOptions {
  double per_instance_budget = 1800.0;
  Execution execution = Execution::Parallel;
};

/// Runs every requested algorithm on every graph. Error rates are taken
/// against A1, or A2 when A1 timed out; they stay empty if neither finished.
/// Rows come back sorted by (node_count, edge_count) with test ids 1..N in
/// that order. Throws MissingBaseline when neither A1 nor A2 is requested and
/// the graph list is non-empty. Timeouts are
/// recorded per run, not thrown.
std::vector<BenchRecord> run_benchmark(std::span<const WeightedGraph> graphs,
                                       std::span<const Algorithm> algorithms,
                                       const BenchOptions& opts = {});

/// Header plus one line per record. Columns: test id, edges, nodes, density,
/// then weight and runtime for A1..A8, then signed and absolute error rates
/// for A1..A8.
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Graph density |E| / C(n, 2); 0 for fewer than two nodes.
double graph_density(std::size_t node_count, std::size_t edge_count);

struct SuiteSize {
  std::size_t edges;
  std::size_t nodes;
};

/// The 43 (edges, nodes) pairs of the reference benchmark, in table order.
std::span<const SuiteSize> reference_suite_sizes();

/// Generated graphs matching reference_suite_sizes, one seed per row derived
/// from `seed`.
std::vector<WeightedGraph> build_reference_suite(std::uint64_t seed, Weight weight_low = 0.1,
                                                 Weight weight_high = 100.0);

}  // namespace mwis
