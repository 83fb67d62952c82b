#pragma once

#include <optional>
#include <vector>

#include "mwis/decomposition.hpp"
#include "mwis/detail/bitgraph.hpp"

namespace mwis::detail {

struct MaskSdEntry {
  std::uint32_t removed;
  std::vector<NodeMask> components;
};
using MaskSd = std::vector<MaskSdEntry>;

/// Scratch arrays reused across kernel calls on one BitGraph.
struct Workspace {
  explicit Workspace(std::uint32_t n)
      : parent(n), depth(n), counts(n), dist(n), order(n) {
    stack.reserve(n);
  }
  std::vector<std::uint32_t> parent, depth, counts, dist, order;
  std::vector<std::uint32_t> stack;
};

/// Paton sweep over the subgraph induced by `m`. Calls on_cycle(z, w) once per
/// non-tree edge; ws.parent/ws.depth describe the spanning forest at that
/// moment (parent of a root is itself).
template <class OnCycle>
void paton_sweep(const BitGraph& g, const NodeMask& m, Workspace& ws, OnCycle&& on_cycle) {
  NodeMask in_tree = g.empty_mask();
  NodeMask processed = g.empty_mask();
  for (auto root = m.first(); root != NodeMask::npos;
       root = minus(m, in_tree).first()) {
    in_tree.set(root);
    ws.parent[root] = root;
    ws.depth[root] = 0;
    ws.stack.clear();
    ws.stack.push_back(root);
    while (!ws.stack.empty()) {
      auto z = ws.stack.back();
      ws.stack.pop_back();
      NodeMask open = g.adj[z] & m;
      open.subtract(processed);
      open.for_each([&](std::uint32_t w) {
        if (in_tree.test(w)) {
          on_cycle(z, w);
        } else {
          in_tree.set(w);
          ws.parent[w] = z;
          ws.depth[w] = ws.depth[z] + 1;
          ws.stack.push_back(w);
        }
      });
      processed.set(z);
    }
  }
}

/// Visits the nodes of the fundamental cycle closed by the non-tree edge (z, w):
/// z up to the common ancestor, then down to w.
template <class Visit>
void walk_cycle(const Workspace& ws, std::uint32_t z, std::uint32_t w, Visit&& visit) {
  std::vector<std::uint32_t> tail;
  auto a = z, b = w;
  while (ws.depth[a] > ws.depth[b]) {
    visit(a);
    a = ws.parent[a];
  }
  while (ws.depth[b] > ws.depth[a]) {
    tail.push_back(b);
    b = ws.parent[b];
  }
  while (a != b) {
    visit(a);
    tail.push_back(b);
    a = ws.parent[a];
    b = ws.parent[b];
  }
  visit(a);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) visit(*it);
}

/// Fills ws.counts[v] for every v in m.
void count_cycles(const BitGraph& g, const NodeMask& m, Workspace& ws);

bool is_forest(const BitGraph& g, const NodeMask& m, std::size_t component_count);

/// Diameter of a tree component by a double sweep.
std::uint32_t tree_diameter(const BitGraph& g, const NodeMask& tree, Workspace& ws);

/// Center of a tree component by leaf stripping; smaller index on two survivors.
std::uint32_t tree_center(const BitGraph& g, const NodeMask& tree);

/// Kind of a connected component, nullopt if not a unit substructure.
std::optional<CusKind> cus_kind(const BitGraph& g, const NodeMask& comp);

/// Every component of `m` is a unit substructure.
bool is_base(const BitGraph& g, const NodeMask& m);

MaskSd decompose(const BitGraph& g, const NodeMask& m, Workspace& ws);

/// Eccentricity maximum over all sources; npos if disconnected.
std::uint32_t all_pairs_diameter_serial(const BitGraph& g);
std::uint32_t all_pairs_diameter_parallel(const BitGraph& g);

}  // namespace mwis::detail
