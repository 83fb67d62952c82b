#pragma once

#include "mwis/graph.hpp"
#include "mwis/parallel.hpp"
#include "mwis/result.hpp"

namespace mwis {

/// Node-selection rule of the greedy algorithms. On the remaining graph,
///   Gwmin  scores v by w(v) / (deg(v) + 1),
///   Gwmin2 scores v by w(v) / (sum of weights over v and its neighbors).
enum class Selector { Gwmin, Gwmin2 };

/// Where a hybrid runs the greedy when a compare subgraph is not a union of
/// unit substructures: on the whole level graph, or on the non-neighbors of
/// the added node (which is then adjoined).
enum class Scope { WholeSubgraph, NonNeighborSubgraph };

/// Repeatedly takes the best-scoring node (smallest id on ties, scores
/// compared to a relative 1e-12) and deletes its closed neighborhood.
IndependentSet greedy_mis(const WeightedGraph& g, Selector selector,
                          Execution exec = Execution::Serial);

/// Sum over v of w(v) / (deg(v) + 1).
Weight gwmin_bound(const WeightedGraph& g);
/// Sum over v of w(v)^2 / (sum of weights over v and its neighbors).
Weight gwmin2_bound(const WeightedGraph& g);
Weight greedy_bound(const WeightedGraph& g, Selector selector);

/// A4, A5, A7 or A8.
Algorithm composed_algorithm(Selector selector, Scope scope);

/// Exact divide-and-conquer with greedy compare sets wherever the exact
/// solver would have recursed on a compare subgraph.
SolveResult solve_composed(const WeightedGraph& g, Selector selector, Scope scope,
                           const SolveControl& ctl = {});

}  // namespace mwis
