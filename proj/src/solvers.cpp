#include "mwis/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "engine.hpp"

namespace mwis {

namespace detail {

void Family::dedupe() {
  if (words_ == 0) {
    count_ = std::min<std::size_t>(count_, 1);
    return;
  }
  const std::size_t n = size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(at(a), at(a) + words_, at(b), at(b) + words_);
  };
  std::sort(idx.begin(), idx.end(), less);
  std::vector<std::uint64_t> out;
  out.reserve(data_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && std::equal(at(idx[k]), at(idx[k]) + words_, at(idx[k - 1]))) continue;
    out.insert(out.end(), at(idx[k]), at(idx[k]) + words_);
  }
  data_ = std::move(out);
}

std::pair<NodeMask, NodeMask> cus_sides(const BitGraph& g, const NodeMask& comp) {
  const auto n = comp.count();
  std::uint32_t center = comp.first();
  if (n >= 3)
    comp.for_each([&](std::uint32_t v) {
      if (g.adj[v].count_and(comp) == n - 1) center = v;
    });
  NodeMask hub = g.empty_mask();
  hub.set(center);
  return {hub, minus(comp, hub)};
}

Choice cus_choice(const BitGraph& g, const NodeMask& comp) {
  auto [hub, rest] = cus_sides(g, comp);
  Choice a{std::move(hub), 0.0};
  Choice b{std::move(rest), 0.0};
  a.weight = g.weight_of(a.set);
  b.weight = g.weight_of(b.set);
  if (heavier(a.weight, b.weight)) return a;
  if (heavier(b.weight, a.weight)) return b;
  if (b.set.none()) return a;
  return a.set.first() < b.set.first() ? a : b;
}

Choice combine_choices(const BitGraph& g, const std::vector<std::shared_ptr<const Choice>>& parts) {
  Choice out{g.empty_mask(), 0.0};
  for (const auto& p : parts) {
    out.set |= p->set;
    out.weight += p->weight;
  }
  return out;
}

Choice pick_heavier(Choice prelim, Choice compare) {
  return heavier(compare.weight, prelim.weight) ? std::move(compare) : std::move(prelim);
}

Family ExactAmisPolicy::cus(const BitGraph& g, const NodeMask& c) const {
  auto [hub, rest] = cus_sides(g, c);
  Family f(g.empty_mask().words());
  f.push(hub);
  if (rest.any()) f.push(rest);
  return f;
}

Family ExactAmisPolicy::combine(const BitGraph& g,
                                const std::vector<std::shared_ptr<const Family>>& parts) const {
  const auto words = g.empty_mask().words();
  Family acc(words);
  acc.push(g.empty_mask());
  for (const auto& p : parts) {
    if (p->size() == 1 && acc.size() == 1) {
      NodeMask m = acc.mask(0, g.size()) | p->mask(0, g.size());
      acc = Family(words);
      acc.push(m);
      continue;
    }
    Family next(words);
    next.reserve(acc.size() * p->size());
    std::vector<std::uint64_t> buf(words);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < p->size(); ++j) {
        for (std::uint32_t w = 0; w < words; ++w) buf[w] = acc.at(i)[w] | p->at(j)[w];
        next.push(buf.data());
      }
    acc = std::move(next);
  }
  return acc;
}

Family ExactAmisPolicy::merge(const BitGraph& g, Family prelim, Family compare,
                              std::uint32_t r) const {
  const auto words = prelim.words();
  const auto* nbr = g.adj[r].data();
  Family out(words);
  out.reserve(prelim.size() + compare.size());
  for (std::size_t i = 0; i < prelim.size(); ++i) {
    const auto* s = prelim.at(i);
    bool touches = false;
    for (std::uint32_t w = 0; w < words && !touches; ++w) touches = (s[w] & nbr[w]) != 0;
    if (touches) out.push(s);
  }
  for (std::size_t i = 0; i < compare.size(); ++i) out.push(compare.at(i));
  return out;
}

std::optional<Family> ExactAmisPolicy::restrict(const BitGraph& g, const Family& level,
                                                const NodeMask& comp) const {
  const auto words = level.words();
  Family out(words);
  out.reserve(level.size());
  std::vector<std::uint64_t> buf(words);
  for (std::size_t i = 0; i < level.size(); ++i) {
    for (std::uint32_t w = 0; w < words; ++w) buf[w] = level.at(i)[w] & comp.data()[w];
    out.push(buf.data());
  }
  out.dedupe();
  (void)g;
  return out;
}

Choice best_of(const BitGraph& g, const Family& f) {
  Choice best{g.empty_mask(), 0.0};
  NodeSet best_ids;
  bool have = false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    NodeMask m = f.mask(i, g.size());
    Weight w = g.weight_of(m);
    if (!have || heavier(w, best.weight)) {
      best = {std::move(m), w};
      best_ids = g.to_ids(best.set);
      have = true;
    } else if (!heavier(best.weight, w)) {
      auto ids = g.to_ids(m);
      if (ids < best_ids) {
        best = {std::move(m), w};
        best_ids = std::move(ids);
      }
    }
  }
  return best;
}

}  // namespace detail

using detail::BitGraph;
using detail::NodeMask;

namespace {

IndependentSet to_independent_set(const BitGraph& bg, const NodeMask& m) {
  return {bg.to_ids(m), bg.weight_of(m)};
}

NodeMask checked_cus(const BitGraph& bg, const WeightedGraph& g) {
  auto all = bg.full_mask();
  if (g.empty() || detail::component_of(bg, all, 0).count() != bg.size() ||
      !detail::cus_kind(bg, all))
    throw Error(Errc::NotCus, "graph is not a connected unit substructure");
  return all;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

void MISCollection::canonicalize() {
  for (auto& s : sets) s = make_node_set(std::move(s));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

MISCollection make_collection(std::vector<NodeSet> sets) {
  MISCollection c{std::move(sets)};
  c.canonicalize();
  return c;
}

IndependentSet cus_mwis(const WeightedGraph& g) {
  auto bg = BitGraph::from(g);
  auto all = checked_cus(bg, g);
  return to_independent_set(bg, detail::cus_choice(bg, all).set);
}

MISCollection cus_amis(const WeightedGraph& g) {
  auto bg = BitGraph::from(g);
  auto all = checked_cus(bg, g);
  auto [hub, rest] = detail::cus_sides(bg, all);
  std::vector<NodeSet> sets{bg.to_ids(hub)};
  if (rest.any()) sets.push_back(bg.to_ids(rest));
  return make_collection(std::move(sets));
}

IndependentSet combine_components(std::span<const IndependentSet> per_component) {
  IndependentSet out;
  for (const auto& part : per_component) {
    out.members.insert(out.members.end(), part.members.begin(), part.members.end());
    out.total_weight += part.total_weight;
  }
  auto n = out.members.size();
  out.members = make_node_set(std::move(out.members));
  if (out.members.size() != n)
    throw Error(Errc::OverlappingComponents, "a node appears in two components");
  return out;
}

MISCollection combine_amis(std::span<const MISCollection> per_component) {
  NodeSet seen;
  for (const auto& c : per_component) {
    NodeSet nodes;
    for (const auto& s : c.sets) nodes.insert(nodes.end(), s.begin(), s.end());
    nodes = make_node_set(std::move(nodes));
    NodeSet common;
    std::set_intersection(seen.begin(), seen.end(), nodes.begin(), nodes.end(),
                          std::back_inserter(common));
    if (!common.empty())
      throw Error(Errc::OverlappingComponents, "a node appears in two components");
    NodeSet merged;
    std::merge(seen.begin(), seen.end(), nodes.begin(), nodes.end(), std::back_inserter(merged));
    seen = std::move(merged);
  }
  std::vector<NodeSet> acc{{}};
  for (const auto& c : per_component) {
    std::vector<NodeSet> next;
    for (const auto& a : acc)
      for (const auto& s : c.sets) {
        NodeSet u;
        std::set_union(a.begin(), a.end(), s.begin(), s.end(), std::back_inserter(u));
        next.push_back(std::move(u));
      }
    acc = std::move(next);
  }
  return make_collection(std::move(acc));
}

MISCollection special_union(const MISCollection& a, const MISCollection& b) {
  std::vector<NodeSet> all = a.sets;
  all.insert(all.end(), b.sets.begin(), b.sets.end());
  auto merged = make_collection(std::move(all));
  std::vector<NodeSet> kept;
  for (std::size_t i = 0; i < merged.sets.size(); ++i) {
    const auto& s = merged.sets[i];
    bool nested = false;
    for (std::size_t j = 0; j < merged.sets.size() && !nested; ++j)
      nested = j != i && merged.sets[j].size() > s.size() &&
               std::includes(merged.sets[j].begin(), merged.sets[j].end(), s.begin(), s.end());
    if (!nested) kept.push_back(s);
  }
  return MISCollection{std::move(kept)};
}

IndependentSet compare_set(const WeightedGraph& g_l, NodeId l, const MwisStrategy& sub_solver) {
  auto rest = complement_nonneighbors(g_l, l);
  IndependentSet sub = is_base_graph(rest) ? [&] {
    auto bg = BitGraph::from(rest);
    detail::ExactMwisPolicy policy;
    SolveControl ctl;
    detail::PhaseTwo<detail::ExactMwisPolicy> engine(bg, policy, ctl);
    return to_independent_set(bg, engine.direct(bg.full_mask()).set);
  }() : sub_solver(rest);
  sub.members.push_back(l);
  sub.members = make_node_set(std::move(sub.members));
  sub.total_weight = g_l.weight_of(sub.members);
  return sub;
}

SolveResult solve_mwis(const WeightedGraph& g, const SolveControl& ctl) {
  auto t0 = std::chrono::steady_clock::now();
  auto bg = BitGraph::from(g);
  detail::ExactMwisPolicy policy;
  detail::PhaseTwo<detail::ExactMwisPolicy> engine(bg, policy, ctl);
  auto choice = engine.solve(bg.full_mask());
  SolveResult r;
  r.algorithm = Algorithm::A1;
  r.solution = to_independent_set(bg, choice.set);
  r.runtime_seconds = seconds_since(t0);
  r.verified_independent = is_independent(g, r.solution.members);
  r.verified_maximal = is_maximal_independent(g, r.solution.members);
  return r;
}

namespace {

detail::Family amisl_family(const BitGraph& bg, const SolveControl& ctl) {
  detail::ExactAmisPolicy policy;
  detail::PhaseTwo<detail::ExactAmisPolicy> engine(bg, policy, ctl);
  return engine.solve(bg.full_mask());
}

}  // namespace

IndependentSet solve_amisl_best(const WeightedGraph& g, const SolveControl& ctl,
                                std::size_t* family_size) {
  auto bg = BitGraph::from(g);
  auto family = amisl_family(bg, ctl);
  if (family_size) *family_size = family.size();
  return to_independent_set(bg, detail::best_of(bg, family).set);
}

AMISLResult solve_amisl(const WeightedGraph& g, const SolveControl& ctl) {
  auto t0 = std::chrono::steady_clock::now();
  auto bg = BitGraph::from(g);
  auto family = amisl_family(bg, ctl);
  AMISLResult r;
  r.collection.sets.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    r.collection.sets.push_back(bg.to_ids(family.mask(i, bg.size())));
  r.collection.canonicalize();
  r.best = to_independent_set(bg, detail::best_of(bg, family).set);
  r.runtime_seconds = seconds_since(t0);
  return r;
}

}  // namespace mwis
