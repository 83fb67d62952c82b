#pragma once

#include <cstdint>

#include "mwis/graph.hpp"

namespace mwis {

struct GeneratorSpec {
  std::size_t node_count = 0;
  double density = 0.0;  // |E| / C(n, 2)
  Weight weight_low = 0.1;
  Weight weight_high = 100.0;
  std::uint64_t seed = 0;
};

/// Target edge count: density * C(n, 2) rounded to nearest.
std::size_t target_edge_count(std::size_t node_count, double density);

/// Nodes 0..n-1 with weights uniform in [low, high]; the edges are the first
/// target_edge_count pairs of a seeded shuffle of all pairs. The output
/// depends only on the GeneratorSpec, not on the standard library in use.
/// Errors: InvalidDensity, InvalidWeightRange.
WeightedGraph generate_graph(const GeneratorSpec& spec);

/// Same construction with the edge count given directly.
WeightedGraph generate_graph_with_edges(std::size_t node_count, std::size_t edge_count,
                                        Weight weight_low, Weight weight_high, std::uint64_t seed);

}  // namespace mwis
