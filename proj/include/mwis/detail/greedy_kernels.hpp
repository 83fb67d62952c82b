#pragma once

#include "mwis/detail/bitgraph.hpp"
#include "mwis/greedy.hpp"

namespace mwis::detail {

/// Best-scoring node of `rest` (smallest index on ties); npos when empty.
std::uint32_t greedy_pick_serial(const BitGraph& g, const NodeMask& rest, Selector s);
std::uint32_t greedy_pick_parallel(const BitGraph& g, const NodeMask& rest, Selector s);

/// Greedy maximal independent set of the subgraph induced by `m`.
NodeMask greedy_select(const BitGraph& g, const NodeMask& m, Selector s,
                       Execution exec = Execution::Serial);

}  // namespace mwis::detail
