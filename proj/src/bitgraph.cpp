#include "mwis/detail/bitgraph.hpp"

#include <algorithm>

namespace mwis::detail {

BitGraph BitGraph::from(const WeightedGraph& g) {
  BitGraph b;
  b.ids = g.nodes();
  b.weights = g.local_weights();
  b.adj.assign(b.ids.size(), NodeMask(b.ids.size()));
  const auto& adj = g.local_adjacency();
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (auto j : adj[i]) b.adj[i].set(j);
  return b;
}

NodeMask BitGraph::full_mask() const {
  NodeMask m(ids.size());
  for (std::uint32_t i = 0; i < size(); ++i) m.set(i);
  return m;
}

NodeSet BitGraph::to_ids(const NodeMask& m) const {
  NodeSet out;
  out.reserve(m.count());
  m.for_each([&](std::uint32_t i) { out.push_back(ids[i]); });
  return out;
}

NodeMask BitGraph::to_mask(std::span<const NodeId> s) const {
  NodeMask m(ids.size());
  for (auto id : s) {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id)
      throw Error(Errc::UnknownNode, "node " + std::to_string(id));
    m.set(static_cast<std::uint32_t>(it - ids.begin()));
  }
  return m;
}

Weight BitGraph::weight_of(const NodeMask& m) const {
  Weight total = 0.0;
  m.for_each([&](std::uint32_t i) { total += weights[i]; });
  return total;
}

std::size_t BitGraph::edge_count(const NodeMask& m) const {
  std::size_t twice = 0;
  m.for_each([&](std::uint32_t v) { twice += adj[v].count_and(m); });
  return twice / 2;
}

WeightedGraph BitGraph::to_graph(const NodeMask& m) const {
  std::vector<std::pair<NodeId, Weight>> nodes;
  std::vector<Edge> edges;
  m.for_each([&](std::uint32_t v) {
    nodes.emplace_back(ids[v], weights[v]);
    (adj[v] & m).for_each([&](std::uint32_t u) {
      if (u > v) edges.emplace_back(ids[v], ids[u]);
    });
  });
  return build_graph(nodes, edges);
}

NodeMask component_of(const BitGraph& g, const NodeMask& m, std::uint32_t v) {
  NodeMask comp = g.empty_mask();
  NodeMask frontier = g.empty_mask();
  comp.set(v);
  frontier.set(v);
  while (frontier.any()) {
    NodeMask next = g.empty_mask();
    frontier.for_each([&](std::uint32_t u) { next |= g.adj[u]; });
    next &= m;
    next.subtract(comp);
    comp |= next;
    frontier = std::move(next);
  }
  return comp;
}

std::vector<NodeMask> components(const BitGraph& g, const NodeMask& m) {
  std::vector<NodeMask> out;
  NodeMask rest = m;
  for (auto v = rest.first(); v != NodeMask::npos; v = rest.first()) {
    out.push_back(component_of(g, rest, v));
    rest.subtract(out.back());
  }
  return out;
}

}  // namespace mwis::detail
