#include "mwis/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace mwis {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DuplicateNode: return "DuplicateNode";
    case Errc::NonPositiveWeight: return "NonPositiveWeight";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::UnknownEndpoint: return "UnknownEndpoint";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::Acyclic: return "Acyclic";
    case Errc::Disconnected: return "Disconnected";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::HasCycle: return "HasCycle";
    case Errc::NotCus: return "NotCus";
    case Errc::OverlappingComponents: return "OverlappingComponents";
    case Errc::TooLarge: return "TooLarge";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::BadWeight: return "BadWeight";
    case Errc::InvalidDensity: return "InvalidDensity";
    case Errc::InvalidWeightRange: return "InvalidWeightRange";
    case Errc::ZeroOptimum: return "ZeroOptimum";
    case Errc::MissingBaseline: return "MissingBaseline";
    case Errc::Timeout: return "Timeout";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

bool heavier(Weight a, Weight b) {
  return a - b > kWeightTolerance * std::max(std::fabs(a), std::fabs(b));
}

bool same_weight(Weight a, Weight b) { return !heavier(a, b) && !heavier(b, a); }

NodeSet make_node_set(std::vector<NodeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool WeightedGraph::contains(NodeId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::size_t WeightedGraph::index_of(NodeId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id)
    throw Error(Errc::UnknownNode, "node " + std::to_string(id));
  return static_cast<std::size_t>(it - ids_.begin());
}

Weight WeightedGraph::weight(NodeId id) const { return weights_[index_of(id)]; }

std::size_t WeightedGraph::degree(NodeId id) const { return adj_[index_of(id)].size(); }

NodeSet WeightedGraph::neighbors(NodeId id) const {
  NodeSet out;
  for (auto j : adj_[index_of(id)]) out.push_back(ids_[j]);
  return out;
}

bool WeightedGraph::has_edge(NodeId u, NodeId v) const {
  const auto& a = adj_[index_of(u)];
  auto j = static_cast<std::uint32_t>(index_of(v));
  return std::binary_search(a.begin(), a.end(), j);
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < ids_.size(); ++i)
    for (auto j : adj_[i])
      if (j > i) out.emplace_back(ids_[i], ids_[j]);
  return out;
}

Weight WeightedGraph::weight_of(std::span<const NodeId> s) const {
  NodeSet sorted = make_node_set({s.begin(), s.end()});
  Weight total = 0.0;
  for (auto id : sorted) total += weight(id);
  return total;
}

WeightedGraph build_graph(std::span<const std::pair<NodeId, Weight>> node_weights,
                          std::span<const Edge> edge_list) {
  WeightedGraph g;
  std::vector<std::pair<NodeId, Weight>> nodes(node_weights.begin(), node_weights.end());
  std::sort(nodes.begin(), nodes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0 && nodes[i].first == nodes[i - 1].first)
      throw Error(Errc::DuplicateNode, "node " + std::to_string(nodes[i].first));
    if (!(nodes[i].second > 0.0) || !std::isfinite(nodes[i].second))
      throw Error(Errc::NonPositiveWeight, "node " + std::to_string(nodes[i].first));
    g.ids_.push_back(nodes[i].first);
    g.weights_.push_back(nodes[i].second);
  }
  g.adj_.assign(g.ids_.size(), {});

  std::vector<std::pair<std::uint32_t, std::uint32_t>> local;
  local.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u == v) throw Error(Errc::SelfLoop, "node " + std::to_string(u));
    if (!g.contains(u) || !g.contains(v))
      throw Error(Errc::UnknownEndpoint,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    auto a = static_cast<std::uint32_t>(g.index_of(u));
    auto b = static_cast<std::uint32_t>(g.index_of(v));
    local.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(local.begin(), local.end());
  for (std::size_t i = 1; i < local.size(); ++i)
    if (local[i] == local[i - 1])
      throw Error(Errc::DuplicateEdge, "edge (" + std::to_string(g.ids_[local[i].first]) +
                                           ", " + std::to_string(g.ids_[local[i].second]) +
                                           ")");
  for (auto [a, b] : local) {
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  g.edge_count_ = local.size();
  return g;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const NodeId> s) {
  NodeSet keep = make_node_set({s.begin(), s.end()});
  std::vector<std::int64_t> remap(g.node_count(), -1);
  WeightedGraph out;
  for (auto id : keep) {
    auto i = g.index_of(id);
    remap[i] = static_cast<std::int64_t>(out.ids_.size());
    out.ids_.push_back(id);
    out.weights_.push_back(g.weights_[i]);
  }
  out.adj_.assign(keep.size(), {});
  for (std::size_t k = 0; k < keep.size(); ++k) {
    auto i = g.index_of(keep[k]);
    for (auto j : g.adj_[i])
      if (remap[j] >= 0) out.adj_[k].push_back(static_cast<std::uint32_t>(remap[j]));
    out.edge_count_ += out.adj_[k].size();
  }
  out.edge_count_ /= 2;
  return out;
}

WeightedGraph complement_remove(const WeightedGraph& g, NodeId k) {
  g.index_of(k);
  NodeSet rest;
  for (auto id : g.nodes())
    if (id != k) rest.push_back(id);
  return induced_subgraph(g, rest);
}

WeightedGraph complement_nonneighbors(const WeightedGraph& g, NodeId k) {
  NodeSet closed = g.neighbors(k);
  closed.push_back(k);
  closed = make_node_set(std::move(closed));
  NodeSet rest;
  std::set_difference(g.nodes().begin(), g.nodes().end(), closed.begin(), closed.end(),
                      std::back_inserter(rest));
  return induced_subgraph(g, rest);
}

std::vector<NodeSet> connected_components(const WeightedGraph& g) {
  const auto& adj = g.local_adjacency();
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeSet> comps;
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    if (seen[s]) continue;
    NodeSet comp;
    std::queue<std::uint32_t> q;
    q.push(static_cast<std::uint32_t>(s));
    seen[s] = true;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      comp.push_back(g.nodes()[v]);
      for (auto u : adj[v])
        if (!seen[u]) {
          seen[u] = true;
          q.push(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

std::vector<bool> membership(const WeightedGraph& g, std::span<const NodeId> s) {
  std::vector<bool> in(g.node_count(), false);
  for (auto id : s) in[g.index_of(id)] = true;
  return in;
}

}  // namespace

bool is_independent(const WeightedGraph& g, std::span<const NodeId> s) {
  auto in = membership(g, s);
  const auto& adj = g.local_adjacency();
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (!in[v]) continue;
    for (auto u : adj[v])
      if (in[u]) return false;
  }
  return true;
}

bool is_maximal_independent(const WeightedGraph& g, std::span<const NodeId> s) {
  if (!is_independent(g, s)) return false;
  auto in = membership(g, s);
  const auto& adj = g.local_adjacency();
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (in[v]) continue;
    bool blocked = std::any_of(adj[v].begin(), adj[v].end(), [&](auto u) { return in[u]; });
    if (!blocked) return false;
  }
  return true;
}

}  // namespace mwis
