#include "mwis/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <omp.h>

#include "engine.hpp"
#include "mwis/detail/greedy_kernels.hpp"

namespace mwis {

namespace detail {

namespace {

constexpr double kScoreTolerance = 1e-12;

// Score of v as a fraction num / den on the remaining graph.
struct Score {
  double num;
  double den;
};

Score score(const BitGraph& g, const NodeMask& rest, std::uint32_t v, Selector s) {
  if (s == Selector::Gwmin) return {g.weights[v], double(g.adj[v].count_and(rest)) + 1.0};
  NodeMask closed = g.adj[v] & rest;
  closed.set(v);
  return {g.weights[v], g.weight_of(closed)};
}

bool better(const Score& a, const Score& b) {
  double lhs = a.num * b.den;
  double rhs = b.num * a.den;
  return lhs - rhs > kScoreTolerance * std::max(std::fabs(lhs), std::fabs(rhs));
}

}  // namespace

std::uint32_t greedy_pick_serial(const BitGraph& g, const NodeMask& rest, Selector s) {
  std::uint32_t best = NodeMask::npos;
  Score best_score{0.0, 1.0};
  rest.for_each([&](std::uint32_t v) {
    Score sc = score(g, rest, v, s);
    if (best == NodeMask::npos || better(sc, best_score)) {
      best = v;
      best_score = sc;
    }
  });
  return best;
}

std::uint32_t greedy_pick_parallel(const BitGraph& g, const NodeMask& rest, Selector s) {
  std::vector<std::uint32_t> members;
  members.reserve(rest.count());
  rest.for_each([&](std::uint32_t v) { members.push_back(v); });
  if (members.empty()) return NodeMask::npos;

  const int threads = omp_get_max_threads();
  std::vector<std::uint32_t> local_best(threads, NodeMask::npos);
  std::vector<Score> local_score(threads, Score{0.0, 1.0});
  const auto n = static_cast<std::int64_t>(members.size());
#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    // Static contiguous chunks keep each thread's scan in ascending order.
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      auto v = members[static_cast<std::size_t>(i)];
      Score sc = score(g, rest, v, s);
      if (local_best[t] == NodeMask::npos || better(sc, local_score[t])) {
        local_best[t] = v;
        local_score[t] = sc;
      }
    }
  }
  std::uint32_t best = NodeMask::npos;
  Score best_score{0.0, 1.0};
  for (int t = 0; t < threads; ++t) {
    if (local_best[t] == NodeMask::npos) continue;
    if (best == NodeMask::npos || better(local_score[t], best_score)) {
      best = local_best[t];
      best_score = local_score[t];
    }
  }
  return best;
}

NodeMask greedy_select(const BitGraph& g, const NodeMask& m, Selector s, Execution exec) {
  NodeMask rest = m;
  NodeMask picked = g.empty_mask();
  while (rest.any()) {
    auto v = exec == Execution::Parallel ? greedy_pick_parallel(g, rest, s)
                                         : greedy_pick_serial(g, rest, s);
    picked.set(v);
    rest.subtract(g.adj[v]);
    rest.reset(v);
  }
  return picked;
}

namespace {

struct ComposedPolicy {
  using Answer = Choice;
  Selector selector;
  Scope scope;

  Choice cus(const BitGraph& g, const NodeMask& c) const { return cus_choice(g, c); }
  Choice combine(const BitGraph& g, const std::vector<std::shared_ptr<const Choice>>& p) const {
    return combine_choices(g, p);
  }
  // Greedy runs only on the component of the level graph holding r; the
  // other components keep their preliminary answers.
  Choice compare(PhaseTwo<ComposedPolicy>& engine, const NodeMask& level_graph, std::uint32_t r,
                 const NodeMask& css, const Choice& prelim) const {
    const auto& g = engine.graph();
    const NodeMask local = component_of(g, level_graph, r);
    const NodeMask local_css = css & local;
    Choice c{g.empty_mask(), 0.0};
    if (is_base(g, local_css)) {
      c = engine.direct(local_css);
    } else if (scope == Scope::WholeSubgraph) {
      c.set = greedy_select(g, local, selector);
    } else {
      NodeMask sub = local_css;
      sub.reset(r);
      c.set = greedy_select(g, sub, selector);
      c.set.set(r);
    }
    c.set |= minus(prelim.set, local);
    c.weight = g.weight_of(c.set);
    return c;
  }
  // A preliminary set with no neighbor of r stays maximal only with r added;
  // that union is itself a candidate compare set.
  Choice merge(const BitGraph& g, Choice prelim, Choice compare, std::uint32_t r) const {
    Choice out = pick_heavier(std::move(prelim), std::move(compare));
    if (!out.set.test(r) && !out.set.intersects(g.adj[r])) {
      out.set.set(r);
      out.weight = g.weight_of(out.set);
    }
    return out;
  }
  std::optional<Choice> restrict(const BitGraph&, const Choice&, const NodeMask&) const {
    return std::nullopt;
  }
};

}  // namespace

}  // namespace detail

using detail::BitGraph;

IndependentSet greedy_mis(const WeightedGraph& g, Selector selector, Execution exec) {
  auto bg = BitGraph::from(g);
  auto picked = detail::greedy_select(bg, bg.full_mask(), selector, exec);
  return {bg.to_ids(picked), bg.weight_of(picked)};
}

Weight gwmin_bound(const WeightedGraph& g) {
  Weight total = 0.0;
  for (auto id : g.nodes()) total += g.weight(id) / (double(g.degree(id)) + 1.0);
  return total;
}

Weight gwmin2_bound(const WeightedGraph& g) {
  Weight total = 0.0;
  for (auto id : g.nodes()) {
    NodeSet closed = g.neighbors(id);
    closed.push_back(id);
    Weight w = g.weight(id);
    total += w * w / g.weight_of(closed);
  }
  return total;
}

Weight greedy_bound(const WeightedGraph& g, Selector selector) {
  return selector == Selector::Gwmin ? gwmin_bound(g) : gwmin2_bound(g);
}

Algorithm composed_algorithm(Selector selector, Scope scope) {
  if (selector == Selector::Gwmin)
    return scope == Scope::WholeSubgraph ? Algorithm::A4 : Algorithm::A5;
  return scope == Scope::WholeSubgraph ? Algorithm::A7 : Algorithm::A8;
}

SolveResult solve_composed(const WeightedGraph& g, Selector selector, Scope scope,
                           const SolveControl& ctl) {
  auto t0 = std::chrono::steady_clock::now();
  auto bg = BitGraph::from(g);
  detail::ComposedPolicy policy{selector, scope};
  detail::PhaseTwo<detail::ComposedPolicy> engine(bg, policy, ctl);
  auto choice = engine.solve(bg.full_mask());
  SolveResult r;
  r.algorithm = composed_algorithm(selector, scope);
  r.solution = {bg.to_ids(choice.set), bg.weight_of(choice.set)};
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.verified_independent = is_independent(g, r.solution.members);
  r.verified_maximal = is_maximal_independent(g, r.solution.members);
  return r;
}

}  // namespace mwis
