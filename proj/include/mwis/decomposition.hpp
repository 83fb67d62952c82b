#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mwis/graph.hpp"
#include "mwis/parallel.hpp"

namespace mwis {

/// Closed walk with distinct nodes; consecutive nodes and (last, first) are edges.
struct Cycle {
  std::vector<NodeId> nodes;
};

enum class CusKind { IsolatedNode, ConnectedPair, ShallowTree };

struct SdEntry {
  NodeId removed;
  /// Components of the graph left after this removal, by smallest member.
  std::vector<NodeSet> components;

  friend bool operator==(const SdEntry&, const SdEntry&) = default;
};

/// Removal log of the dividing phase; entries in removal order.
struct SubgraphsDictionary {
  std::vector<SdEntry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  friend bool operator==(const SubgraphsDictionary&, const SubgraphsDictionary&) = default;
};

/// Fundamental cycles from a Paton spanning-tree sweep, one sweep per component.
/// The root of each component is its smallest id; neighbors are taken in
/// ascending order and the most recently pushed node is expanded next.
std::vector<Cycle> cycle_basis(const WeightedGraph& g);

/// Number of basis cycles through each node (every node present, zeros included).
std::map<NodeId, std::size_t> cycle_counts(const WeightedGraph& g);

/// Node on the most basis cycles, smallest id on ties. Throws Acyclic.
NodeId max_cycle_node(const WeightedGraph& g);

/// Largest eccentricity, by breadth-first search from every node.
/// Throws EmptyGraph or Disconnected.
std::size_t diameter(const WeightedGraph& g, Execution exec = Execution::Serial);

/// Center of the widest component of a forest, found by repeatedly stripping
/// nodes of degree <= 1; the smaller id wins when two nodes survive.
/// Throws HasCycle, or NotApplicable when every component has diameter <= 2.
NodeId middle_node(const WeightedGraph& g);

/// Kind of a connected unit substructure, or nullopt when `g` is none
/// (including the empty graph). Throws Disconnected.
std::optional<CusKind> is_cus(const WeightedGraph& g);

/// True when every component of `g` is a unit substructure.
bool is_base_graph(const WeightedGraph& g);

/// Removes max-cycle nodes until the graph is a forest, then middle nodes
/// until every component has diameter <= 2.
SubgraphsDictionary decompose(const WeightedGraph& g);

/// `g` with every removed node of `sd` deleted.
WeightedGraph residual_graph(const WeightedGraph& g, const SubgraphsDictionary& sd);

}  // namespace mwis
