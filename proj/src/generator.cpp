#include "mwis/generator.hpp"

#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace mwis {

namespace {

// Uniform integer in [0, bound) by multiply-and-reject.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  using u128 = unsigned __int128;
  u128 m = u128(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = u128(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

void check_range(Weight low, Weight high) {
  if (!(low > 0.0) || !(high >= low) || !std::isfinite(high))
    throw Error(Errc::InvalidWeightRange, std::to_string(low) + ".." + std::to_string(high));
}

}  // namespace

std::size_t target_edge_count(std::size_t node_count, double density) {
  const double pairs = double(node_count) * double(node_count - (node_count ? 1 : 0)) / 2.0;
  return static_cast<std::size_t>(std::llround(density * pairs));
}

WeightedGraph generate_graph(const GeneratorSpec& spec) {
  if (!(spec.density >= 0.0 && spec.density <= 1.0))
    throw Error(Errc::InvalidDensity, std::to_string(spec.density));
  check_range(spec.weight_low, spec.weight_high);
  return generate_graph_with_edges(spec.node_count, target_edge_count(spec.node_count, spec.density),
                                   spec.weight_low, spec.weight_high, spec.seed);
}

WeightedGraph generate_graph_with_edges(std::size_t node_count, std::size_t edge_count,
                                        Weight weight_low, Weight weight_high, std::uint64_t seed) {
  check_range(weight_low, weight_high);
  const std::size_t pairs_total = node_count < 2 ? 0 : node_count * (node_count - 1) / 2;
  if (edge_count > pairs_total)
    throw Error(Errc::InvalidDensity, std::to_string(edge_count) + " edges on " +
                                          std::to_string(node_count) + " nodes");
  std::mt19937_64 rng(seed);

  std::vector<std::pair<NodeId, Weight>> nodes(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    Weight w = weight_low + (weight_high - weight_low) * unit(rng);
    nodes[i] = {static_cast<NodeId>(i), w};
  }

  std::vector<Edge> pairs;
  pairs.reserve(pairs_total);
  for (NodeId u = 0; u < node_count; ++u)
    for (NodeId v = u + 1; v < node_count; ++v) pairs.emplace_back(u, v);
  for (std::size_t i = 0; i < edge_count; ++i)
    std::swap(pairs[i], pairs[i + bounded(rng, pairs_total - i)]);
  pairs.resize(edge_count);
  return build_graph(nodes, pairs);
}

}  // namespace mwis
