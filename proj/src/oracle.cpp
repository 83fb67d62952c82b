#include "mwis/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <omp.h>

namespace mwis {

namespace {

// Largest graph a 64-bit subset scan can cover in reasonable time.
constexpr std::size_t kHardLimit = 40;

void check_size(const WeightedGraph& g, const OracleConfig& cfg) {
  if (g.node_count() > cfg.max_nodes || g.node_count() > kHardLimit)
    throw Error(Errc::TooLarge, std::to_string(g.node_count()) + " nodes exceed the limit of " +
                                    std::to_string(std::min(cfg.max_nodes, kHardLimit)));
}

std::vector<std::uint64_t> adjacency_bits(const WeightedGraph& g) {
  std::vector<std::uint64_t> adj(g.node_count(), 0);
  const auto& local = g.local_adjacency();
  for (std::size_t v = 0; v < local.size(); ++v)
    for (auto u : local[v]) adj[v] |= std::uint64_t{1} << u;
  return adj;
}

// Weight of `s` if independent, negative otherwise.
double subset_weight(std::uint64_t s, const std::vector<std::uint64_t>& adj,
                     const std::vector<Weight>& w) {
  double total = 0.0;
  for (std::uint64_t rest = s; rest; rest &= rest - 1) {
    auto v = static_cast<std::size_t>(__builtin_ctzll(rest));
    if (adj[v] & s) return -1.0;
    total += w[v];
  }
  return total;
}

// Lexicographic order of the sorted index lists of two subsets.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    auto x = __builtin_ctzll(a), y = __builtin_ctzll(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

bool near_max(double w, double best) { return w >= 0.0 && !heavier(best, w); }

std::uint64_t scan_serial(std::uint64_t limit, const std::vector<std::uint64_t>& adj,
                          const std::vector<Weight>& w) {
  double best = 0.0;
  for (std::uint64_t s = 0; s < limit; ++s) best = std::max(best, subset_weight(s, adj, w));
  std::uint64_t pick = 0;
  bool have = false;
  for (std::uint64_t s = 0; s < limit; ++s)
    if (near_max(subset_weight(s, adj, w), best) && (!have || lex_less(s, pick))) {
      pick = s;
      have = true;
    }
  return pick;
}

std::uint64_t scan_parallel(std::uint64_t limit, const std::vector<std::uint64_t>& adj,
                            const std::vector<Weight>& w) {
  double best = 0.0;
  const auto n = static_cast<std::int64_t>(limit);
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::int64_t s = 0; s < n; ++s)
    best = std::max(best, subset_weight(static_cast<std::uint64_t>(s), adj, w));

  const int threads = omp_get_max_threads();
  std::vector<std::uint64_t> pick(threads, 0);
  std::vector<char> have(threads, 0);
#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      auto s = static_cast<std::uint64_t>(i);
      if (near_max(subset_weight(s, adj, w), best) && (!have[t] || lex_less(s, pick[t]))) {
        pick[t] = s;
        have[t] = 1;
      }
    }
  }
  std::uint64_t out = 0;
  bool any = false;
  for (int t = 0; t < threads; ++t)
    if (have[t] && (!any || lex_less(pick[t], out))) {
      out = pick[t];
      any = true;
    }
  return out;
}

void enumerate(std::size_t i, std::uint64_t current, const std::vector<std::uint64_t>& adj,
               std::vector<std::uint64_t>& out) {
  const std::size_t n = adj.size();
  if (i == n) {
    for (std::size_t v = 0; v < n; ++v)
      if (!((current >> v) & 1u) && !(adj[v] & current)) return;
    out.push_back(current);
    return;
  }
  if (!(adj[i] & current)) enumerate(i + 1, current | (std::uint64_t{1} << i), adj, out);
  enumerate(i + 1, current, adj, out);
}

NodeSet ids_of(const WeightedGraph& g, std::uint64_t s) {
  NodeSet out;
  for (; s; s &= s - 1) out.push_back(g.nodes()[static_cast<std::size_t>(__builtin_ctzll(s))]);
  return out;
}

}  // namespace

IndependentSet oracle_mwis(const WeightedGraph& g, const OracleConfig& cfg, Execution exec) {
  check_size(g, cfg);
  auto adj = adjacency_bits(g);
  const std::uint64_t limit = std::uint64_t{1} << g.node_count();
  auto s = exec == Execution::Parallel ? scan_parallel(limit, adj, g.local_weights())
                                       : scan_serial(limit, adj, g.local_weights());
  IndependentSet out;
  out.members = ids_of(g, s);
  out.total_weight = subset_weight(s, adj, g.local_weights());
  return out;
}

MISCollection oracle_amis(const WeightedGraph& g, const OracleConfig& cfg) {
  check_size(g, cfg);
  auto adj = adjacency_bits(g);
  std::vector<std::uint64_t> found;
  enumerate(0, 0, adj, found);
  std::vector<NodeSet> sets;
  for (auto s : found) sets.push_back(ids_of(g, s));
  return make_collection(std::move(sets));
}

}  // namespace mwis
