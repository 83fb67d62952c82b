#pragma once

#include <cstddef>

#include "mwis/graph.hpp"
#include "mwis/parallel.hpp"
#include "mwis/solvers.hpp"

namespace mwis {

/// Brute-force references. They share nothing with the solvers beyond the
/// graph type, and the two of them share nothing with each other.
struct OracleConfig {
  std::size_t max_nodes = 20;
};

/// Scans every node subset. Among the heaviest independent sets (weights
/// within the relative tolerance of the maximum) returns the one whose sorted
/// id list is lexicographically smallest. Throws TooLarge.
IndependentSet oracle_mwis(const WeightedGraph& g, const OracleConfig& cfg = {},
                           Execution exec = Execution::Serial);

/// Include/exclude recursion over the nodes in id order, keeping the leaves
/// that are maximal. The empty graph yields the family {{}}. Throws TooLarge.
MISCollection oracle_amis(const WeightedGraph& g, const OracleConfig& cfg = {});

}  // namespace mwis
