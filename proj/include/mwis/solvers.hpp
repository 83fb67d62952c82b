#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mwis/graph.hpp"
#include "mwis/result.hpp"

namespace mwis {

/// Family of node sets, none nested in another. Sets are kept in canonical
/// order (lexicographic on the sorted id lists) so equality is family equality.
struct MISCollection {
  std::vector<NodeSet> sets;

  std::size_t size() const { return sets.size(); }
  void canonicalize();
  friend bool operator==(const MISCollection&, const MISCollection&) = default;
};

MISCollection make_collection(std::vector<NodeSet> sets);

struct AMISLResult {
  MISCollection collection;
  IndependentSet best;
  double runtime_seconds = 0.0;
};

/// Heavier of the two maximal sets of a unit substructure; on a tie the set
/// holding the smaller minimum id. Throws NotCus.
IndependentSet cus_mwis(const WeightedGraph& g);
/// The maximal independent sets of a unit substructure. Throws NotCus.
MISCollection cus_amis(const WeightedGraph& g);

/// Union of per-component answers. Throws OverlappingComponents.
IndependentSet combine_components(std::span<const IndependentSet> per_component);
/// Every union picking one set per component. Throws OverlappingComponents.
MISCollection combine_amis(std::span<const MISCollection> per_component);

/// Union of two families with every set contained in another member dropped.
MISCollection special_union(const MISCollection& a, const MISCollection& b);

using MwisStrategy = std::function<IndependentSet(const WeightedGraph&)>;

/// {l} plus an MWIS of the non-neighbors of l. The non-neighbor graph is
/// solved directly when it is a union of unit substructures, otherwise by
/// `sub_solver`. Throws UnknownNode.
IndependentSet compare_set(const WeightedGraph& g_l, NodeId l, const MwisStrategy& sub_solver);

/// Exact maximum weight independent set (A1).
SolveResult solve_mwis(const WeightedGraph& g, const SolveControl& ctl = {});

/// Exact listing of all maximal independent sets (A2) and the heaviest of them.
AMISLResult solve_amisl(const WeightedGraph& g, const SolveControl& ctl = {});

/// Heaviest set found by A2 without materializing the family.
IndependentSet solve_amisl_best(const WeightedGraph& g, const SolveControl& ctl = {},
                                std::size_t* family_size = nullptr);

}  // namespace mwis
