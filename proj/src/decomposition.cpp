#include "mwis/decomposition.hpp"

#include <algorithm>
#include <omp.h>

#include "mwis/detail/decompose_kernels.hpp"

namespace mwis {

int available_threads() { return omp_get_max_threads(); }

namespace detail {

void count_cycles(const BitGraph& g, const NodeMask& m, Workspace& ws) {
  m.for_each([&](std::uint32_t v) { ws.counts[v] = 0; });
  paton_sweep(g, m, ws, [&](std::uint32_t z, std::uint32_t w) {
    auto a = z, b = w;
    while (ws.depth[a] > ws.depth[b]) {
      ++ws.counts[a];
      a = ws.parent[a];
    }
    while (ws.depth[b] > ws.depth[a]) {
      ++ws.counts[b];
      b = ws.parent[b];
    }
    while (a != b) {
      ++ws.counts[a];
      ++ws.counts[b];
      a = ws.parent[a];
      b = ws.parent[b];
    }
    ++ws.counts[a];
  });
}

bool is_forest(const BitGraph& g, const NodeMask& m, std::size_t component_count) {
  return g.edge_count(m) + component_count == m.count();
}

namespace {

// Breadth-first distances inside `m` from `src`; returns the farthest node
// (smallest index among the farthest) and its distance.
std::pair<std::uint32_t, std::uint32_t> farthest(const BitGraph& g, const NodeMask& m,
                                                 std::uint32_t src) {
  NodeMask seen = g.empty_mask();
  NodeMask frontier = g.empty_mask();
  seen.set(src);
  frontier.set(src);
  std::uint32_t dist = 0;
  std::uint32_t far = src;
  while (true) {
    NodeMask next = g.empty_mask();
    frontier.for_each([&](std::uint32_t u) { next |= g.adj[u]; });
    next &= m;
    next.subtract(seen);
    if (next.none()) break;
    ++dist;
    far = next.first();
    seen |= next;
    frontier = std::move(next);
  }
  return {far, dist};
}

std::uint32_t eccentricity(const BitGraph& g, const NodeMask& all, std::uint32_t src) {
  auto [far, dist] = farthest(g, all, src);
  (void)far;
  return dist;
}

}  // namespace

std::uint32_t tree_diameter(const BitGraph& g, const NodeMask& tree, Workspace&) {
  auto [a, da] = farthest(g, tree, tree.first());
  (void)da;
  return farthest(g, tree, a).second;
}

std::uint32_t tree_center(const BitGraph& g, const NodeMask& tree) {
  NodeMask rest = tree;
  NodeMask last = tree;
  while (rest.any()) {
    NodeMask layer = g.empty_mask();
    rest.for_each([&](std::uint32_t v) {
      if (g.adj[v].count_and(rest) <= 1) layer.set(v);
    });
    rest.subtract(layer);
    last = std::move(layer);
  }
  return last.first();
}

std::optional<CusKind> cus_kind(const BitGraph& g, const NodeMask& comp) {
  auto n = comp.count();
  if (n == 0) return std::nullopt;
  if (n == 1) return CusKind::IsolatedNode;
  if (g.edge_count(comp) != n - 1) return std::nullopt;
  if (n == 2) return CusKind::ConnectedPair;
  bool has_center = false;
  comp.for_each([&](std::uint32_t v) {
    if (g.adj[v].count_and(comp) == n - 1) has_center = true;
  });
  if (has_center) return CusKind::ShallowTree;
  return std::nullopt;
}

bool is_base(const BitGraph& g, const NodeMask& m) {
  // A forest of stars is exactly a graph in which every edge has an endpoint
  // of degree one: any cycle or any path on four nodes has an edge whose
  // endpoints both have degree >= 2.
  NodeMask hubs = g.empty_mask();
  m.for_each([&](std::uint32_t v) {
    if (g.adj[v].count_and(m) >= 2) hubs.set(v);
  });
  bool ok = true;
  hubs.for_each([&](std::uint32_t v) {
    if (ok && g.adj[v].intersects(hubs)) ok = false;
  });
  return ok;
}

MaskSd decompose(const BitGraph& g, const NodeMask& m, Workspace& ws) {
  MaskSd sd;
  NodeMask cur = m;
  auto comps = components(g, cur);

  // Break every cycle.
  while (!is_forest(g, cur, comps.size())) {
    count_cycles(g, cur, ws);
    std::uint32_t best = NodeMask::npos;
    cur.for_each([&](std::uint32_t v) {
      if (best == NodeMask::npos || ws.counts[v] > ws.counts[best]) best = v;
    });
    cur.reset(best);
    comps = components(g, cur);
    sd.push_back({best, comps});
  }

  // Shorten paths longer than two edges.
  while (true) {
    std::uint32_t widest = 0;
    const NodeMask* target = nullptr;
    for (const auto& c : comps) {
      auto d = tree_diameter(g, c, ws);
      if (d > widest) {
        widest = d;
        target = &c;
      }
    }
    if (widest <= 2) break;
    auto mid = tree_center(g, *target);
    cur.reset(mid);
    comps = components(g, cur);
    sd.push_back({mid, comps});
  }
  return sd;
}

std::uint32_t all_pairs_diameter_serial(const BitGraph& g) {
  if (g.size() == 0) return 0;
  auto all = g.full_mask();
  if (component_of(g, all, 0).count() != g.size()) return NodeMask::npos;
  std::uint32_t best = 0;
  for (std::uint32_t s = 0; s < g.size(); ++s) best = std::max(best, eccentricity(g, all, s));
  return best;
}

std::uint32_t all_pairs_diameter_parallel(const BitGraph& g) {
  if (g.size() == 0) return 0;
  auto all = g.full_mask();
  if (component_of(g, all, 0).count() != g.size()) return NodeMask::npos;
  std::uint32_t best = 0;
  const auto n = static_cast<std::int64_t>(g.size());
#pragma omp parallel for schedule(dynamic, 8) reduction(max : best)
  for (std::int64_t s = 0; s < n; ++s)
    best = std::max(best, eccentricity(g, all, static_cast<std::uint32_t>(s)));
  return best;
}

}  // namespace detail

using detail::BitGraph;
using detail::NodeMask;

std::vector<Cycle> cycle_basis(const WeightedGraph& g) {
  auto bg = BitGraph::from(g);
  detail::Workspace ws(bg.size());
  std::vector<Cycle> out;
  detail::paton_sweep(bg, bg.full_mask(), ws, [&](std::uint32_t z, std::uint32_t w) {
    Cycle c;
    detail::walk_cycle(ws, z, w, [&](std::uint32_t v) { c.nodes.push_back(bg.ids[v]); });
    out.push_back(std::move(c));
  });
  return out;
}

std::map<NodeId, std::size_t> cycle_counts(const WeightedGraph& g) {
  auto bg = BitGraph::from(g);
  detail::Workspace ws(bg.size());
  detail::count_cycles(bg, bg.full_mask(), ws);
  std::map<NodeId, std::size_t> out;
  for (std::uint32_t v = 0; v < bg.size(); ++v) out[bg.ids[v]] = ws.counts[v];
  return out;
}

NodeId max_cycle_node(const WeightedGraph& g) {
  auto counts = cycle_counts(g);
  NodeId best = 0;
  std::size_t most = 0;
  for (auto [id, c] : counts)
    if (c > most) {
      most = c;
      best = id;
    }
  if (most == 0) throw Error(Errc::Acyclic, "graph has no cycle");
  return best;
}

std::size_t diameter(const WeightedGraph& g, Execution exec) {
  if (g.empty()) throw Error(Errc::EmptyGraph, "diameter of the empty graph");
  auto bg = BitGraph::from(g);
  auto d = exec == Execution::Parallel ? detail::all_pairs_diameter_parallel(bg)
                                       : detail::all_pairs_diameter_serial(bg);
  if (d == NodeMask::npos) throw Error(Errc::Disconnected, "diameter is infinite");
  return d;
}

NodeId middle_node(const WeightedGraph& g) {
  auto bg = BitGraph::from(g);
  auto all = bg.full_mask();
  auto comps = detail::components(bg, all);
  if (!detail::is_forest(bg, all, comps.size()))
    throw Error(Errc::HasCycle, "middle node needs a forest");
  detail::Workspace ws(bg.size());
  std::uint32_t widest = 0;
  const NodeMask* target = nullptr;
  for (const auto& c : comps) {
    auto d = detail::tree_diameter(bg, c, ws);
    if (d > widest) {
      widest = d;
      target = &c;
    }
  }
  if (widest < 3) throw Error(Errc::NotApplicable, "no component with diameter >= 3");
  return bg.ids[detail::tree_center(bg, *target)];
}

std::optional<CusKind> is_cus(const WeightedGraph& g) {
  if (g.empty()) return std::nullopt;
  auto bg = BitGraph::from(g);
  auto all = bg.full_mask();
  if (detail::component_of(bg, all, 0).count() != bg.size())
    throw Error(Errc::Disconnected, "is_cus expects one component");
  return detail::cus_kind(bg, all);
}

bool is_base_graph(const WeightedGraph& g) {
  auto bg = BitGraph::from(g);
  return detail::is_base(bg, bg.full_mask());
}

SubgraphsDictionary decompose(const WeightedGraph& g) {
  auto bg = BitGraph::from(g);
  detail::Workspace ws(bg.size());
  auto sd = detail::decompose(bg, bg.full_mask(), ws);
  SubgraphsDictionary out;
  for (const auto& e : sd) {
    SdEntry entry{bg.ids[e.removed], {}};
    for (const auto& c : e.components) entry.components.push_back(bg.to_ids(c));
    out.entries.push_back(std::move(entry));
  }
  return out;
}

WeightedGraph residual_graph(const WeightedGraph& g, const SubgraphsDictionary& sd) {
  NodeSet removed;
  for (const auto& e : sd.entries) removed.push_back(e.removed);
  removed = make_node_set(std::move(removed));
  NodeSet keep;
  std::set_difference(g.nodes().begin(), g.nodes().end(), removed.begin(), removed.end(),
                      std::back_inserter(keep));
  return induced_subgraph(g, keep);
}

}  // namespace mwis
