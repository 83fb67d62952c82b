#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mwis/error.hpp"

namespace mwis {

using NodeId = std::uint32_t;
using Weight = double;

/// Sorted, duplicate-free sequence of node ids.
using NodeSet = std::vector<NodeId>;
using Edge = std::pair<NodeId, NodeId>;

/// Relative tolerance used whenever two summed weights are compared.
inline constexpr double kWeightTolerance = 1e-9;

/// True when `a` exceeds `b` by more than the relative weight tolerance.
bool heavier(Weight a, Weight b);
/// True when `a` and `b` agree within the relative weight tolerance.
bool same_weight(Weight a, Weight b);

/// Simple undirected graph with positive node weights. Immutable once built;
/// node ids are kept as given and never renumbered.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return ids_.empty(); }

  /// Node ids in ascending order.
  const NodeSet& nodes() const { return ids_; }
  bool contains(NodeId id) const;
  Weight weight(NodeId id) const;
  std::size_t degree(NodeId id) const;
  /// Neighbors of `id` in ascending order.
  NodeSet neighbors(NodeId id) const;
  bool has_edge(NodeId u, NodeId v) const;
  /// Edges as (smaller, larger) pairs, lexicographically sorted.
  std::vector<Edge> edges() const;
  /// Sum of the weights of `s`, accumulated in ascending id order.
  Weight weight_of(std::span<const NodeId> s) const;

  /// Position of `id` in nodes(); throws UnknownNode.
  std::size_t index_of(NodeId id) const;
  const std::vector<std::vector<std::uint32_t>>& local_adjacency() const {
    return adj_;
  }
  const std::vector<Weight>& local_weights() const { return weights_; }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  friend WeightedGraph build_graph(std::span<const std::pair<NodeId, Weight>>,
                                   std::span<const Edge>);
  friend WeightedGraph induced_subgraph(const WeightedGraph&,
                                        std::span<const NodeId>);

  NodeSet ids_;
  std::vector<Weight> weights_;
  std::vector<std::vector<std::uint32_t>> adj_;  // local indices, ascending
  std::size_t edge_count_ = 0;
};

struct IndependentSet {
  NodeSet members;
  Weight total_weight = 0.0;

  friend bool operator==(const IndependentSet&,
                         const IndependentSet&) = default;
};

/// Errors: DuplicateNode, NonPositiveWeight, SelfLoop, DuplicateEdge,
/// UnknownEndpoint.
WeightedGraph build_graph(std::span<const std::pair<NodeId, Weight>> node_weights,
                          std::span<const Edge> edge_list);

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const NodeId> s);
/// g with node k deleted.
WeightedGraph complement_remove(const WeightedGraph& g, NodeId k);
/// g restricted to the non-neighbors of k; k itself is excluded.
WeightedGraph complement_nonneighbors(const WeightedGraph& g, NodeId k);

/// Components ordered by their smallest member.
std::vector<NodeSet> connected_components(const WeightedGraph& g);

bool is_independent(const WeightedGraph& g, std::span<const NodeId> s);
bool is_maximal_independent(const WeightedGraph& g, std::span<const NodeId> s);

/// Sorts and deduplicates.
NodeSet make_node_set(std::vector<NodeId> ids);

}  // namespace mwis
