#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "mwis/generator.hpp"
#include "mwis/graph.hpp"

namespace testing {

using mwis::Edge;
using mwis::NodeId;
using mwis::Weight;
using mwis::WeightedGraph;

inline WeightedGraph make(std::vector<Weight> weights, std::vector<Edge> edges) {
  std::vector<std::pair<NodeId, Weight>> nodes;
  for (std::size_t i = 0; i < weights.size(); ++i) nodes.emplace_back(NodeId(i), weights[i]);
  return mwis::build_graph(nodes, edges);
}

inline WeightedGraph unit(std::size_t n, std::vector<Edge> edges) {
  return make(std::vector<Weight>(n, 1.0), std::move(edges));
}

inline WeightedGraph path(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return unit(n, e);
}

inline WeightedGraph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(i, NodeId((i + 1) % n));
  return unit(n, e);
}

inline WeightedGraph complete(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return unit(n, e);
}

// Node 0 is the center.
inline WeightedGraph star(Weight center, std::vector<Weight> leaves) {
  std::vector<Weight> w{center};
  std::vector<Edge> e;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    w.push_back(leaves[i]);
    e.emplace_back(0, NodeId(i + 1));
  }
  return make(w, e);
}

inline WeightedGraph triangles(std::size_t k) {
  std::vector<Edge> e;
  for (NodeId t = 0; t < k; ++t) {
    NodeId b = 3 * t;
    e.insert(e.end(), {{b, b + 1}, {b + 1, b + 2}, {b, b + 2}});
  }
  return unit(3 * k, e);
}

inline WeightedGraph random_graph(std::size_t n, double density, std::uint64_t seed) {
  return mwis::generate_graph({n, density, 0.1, 100.0, seed});
}

// Node v becomes perm[v]; weights and edges follow. Ids must be < perm.size().
inline WeightedGraph relabel(const WeightedGraph& g, const std::vector<NodeId>& perm) {
  std::vector<std::pair<NodeId, Weight>> nodes;
  for (auto v : g.nodes()) nodes.emplace_back(perm[v], g.weight(v));
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return mwis::build_graph(nodes, edges);
}

inline std::vector<NodeId> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<NodeId> p(n);
  std::iota(p.begin(), p.end(), NodeId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline WeightedGraph scaled(const WeightedGraph& g, double c) {
  std::vector<std::pair<NodeId, Weight>> nodes;
  for (auto v : g.nodes()) nodes.emplace_back(v, g.weight(v) * c);
  auto edges = g.edges();
  return mwis::build_graph(nodes, edges);
}

}  // namespace testing
