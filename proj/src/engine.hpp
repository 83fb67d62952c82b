#pragma once

// Adding-back phase shared by the exact solvers and the greedy hybrids.
//
// A solve call decomposes its graph, then walks the removal log backwards.
// At the level of removed node r (level graph H, H - r already solved):
//   preliminary = combination of the answers of the components of H - r
//   compare     = answer containing r, computed by the policy (which may
//                 reuse the preliminary answer away from r's component)
//   level       = policy.merge(preliminary, compare)
// Answers are memoized per component of the current level graph; a component
// is resolved by memo lookup, then directly when it is a unit substructure,
// then by a recursive solve.

#include <algorithm>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mwis/detail/bitgraph.hpp"
#include "mwis/detail/decompose_kernels.hpp"
#include "mwis/result.hpp"

namespace mwis::detail {

struct Choice {
  NodeMask set;
  Weight weight = 0.0;
};

/// Flat storage for a family of masks of equal width.
class Family {
 public:
  explicit Family(std::uint32_t words) : words_(words) {}

  std::uint32_t words() const { return words_; }
  std::size_t size() const { return words_ ? data_.size() / words_ : count_; }
  const std::uint64_t* at(std::size_t i) const { return data_.data() + i * words_; }

  void push(const std::uint64_t* w) {
    if (words_ == 0) {
      ++count_;
      return;
    }
    data_.insert(data_.end(), w, w + words_);
  }
  void push(const NodeMask& m) { push(m.data()); }
  void reserve(std::size_t n) { data_.reserve(n * words_); }

  NodeMask mask(std::size_t i, std::size_t bits) const {
    NodeMask m(bits);
    std::copy(at(i), at(i) + words_, m.data());
    return m;
  }

  /// Sorts and removes duplicate sets.
  void dedupe();

 private:
  std::uint32_t words_;
  std::size_t count_ = 0;  // size when words_ == 0 (graph without nodes)
  std::vector<std::uint64_t> data_;
};

template <class Policy>
class PhaseTwo {
 public:
  using Answer = typename Policy::Answer;
  using Ptr = std::shared_ptr<const Answer>;

  PhaseTwo(const BitGraph& g, Policy& policy, const SolveControl& ctl)
      : g_(g), policy_(policy), ctl_(ctl), ws_(g.size()) {}

  const BitGraph& graph() const { return g_; }

  /// Answers for a union of unit substructures.
  Answer direct(const NodeMask& m) {
    std::vector<Ptr> parts;
    for (auto& c : components(g_, m))
      parts.push_back(std::make_shared<const Answer>(policy_.cus(g_, c)));
    return policy_.combine(g_, parts);
  }

  Answer solve(const NodeMask& m) {
    if ((calls_++ & 63u) == 0) ctl_.check();
    if (is_base(g_, m)) return direct(m);

    MaskSd sd = decompose(g_, m, ws_);
    NodeMask cur = m;
    for (const auto& e : sd) cur.reset(e.removed);

    std::unordered_map<NodeMask, Ptr, NodeMaskHash> memo;
    std::optional<Answer> level;
    for (std::size_t i = sd.size(); i-- > 0;) {
      const auto r = sd[i].removed;
      const auto& comps = sd[i].components;

      std::vector<Ptr> parts;
      parts.reserve(comps.size());
      for (const auto& c : comps) parts.push_back(resolve(c, memo));
      Answer prelim = policy_.combine(g_, parts);

      NodeMask h = cur;
      h.set(r);
      NodeMask css = minus(h, g_.adj[r]);
      Answer compare = policy_.compare(*this, h, r, css, prelim);
      level.emplace(policy_.merge(g_, std::move(prelim), std::move(compare), r));

      if (i > 0) {
        std::unordered_map<NodeMask, Ptr, NodeMaskHash> next;
        for (const auto& nc : sd[i - 1].components) {
          if (nc.test(r)) {
            if (nc == h) {
              next.emplace(nc, std::make_shared<const Answer>(*level));
            } else if (auto part = policy_.restrict(g_, *level, nc)) {
              next.emplace(nc, std::make_shared<const Answer>(std::move(*part)));
            }
          } else {
            for (std::size_t j = 0; j < comps.size(); ++j)
              if (comps[j] == nc) {
                next.emplace(nc, parts[j]);
                break;
              }
          }
        }
        memo = std::move(next);
      }
      cur = std::move(h);
    }
    return std::move(*level);
  }

 private:
  Ptr resolve(const NodeMask& comp, const std::unordered_map<NodeMask, Ptr, NodeMaskHash>& memo) {
    if (auto it = memo.find(comp); it != memo.end()) return it->second;
    if (cus_kind(g_, comp)) return std::make_shared<const Answer>(policy_.cus(g_, comp));
    return std::make_shared<const Answer>(solve(comp));
  }

  const BitGraph& g_;
  Policy& policy_;
  const SolveControl& ctl_;
  Workspace ws_;
  std::uint64_t calls_ = 0;
};

// Answers shared by every policy producing a single set.

/// The two maximal sets of a unit substructure: {center} and the rest. For a
/// single node the second set is empty; for a pair either endpoint is the center.
std::pair<NodeMask, NodeMask> cus_sides(const BitGraph& g, const NodeMask& comp);

Choice cus_choice(const BitGraph& g, const NodeMask& comp);
Choice combine_choices(const BitGraph& g, const std::vector<std::shared_ptr<const Choice>>& parts);
/// Keeps the preliminary set unless the compare set is strictly heavier.
Choice pick_heavier(Choice prelim, Choice compare);

/// Exact MWIS policy (A1).
struct ExactMwisPolicy {
  using Answer = Choice;

  Choice cus(const BitGraph& g, const NodeMask& c) const { return cus_choice(g, c); }
  Choice combine(const BitGraph& g, const std::vector<std::shared_ptr<const Choice>>& p) const {
    return combine_choices(g, p);
  }
  Choice compare(PhaseTwo<ExactMwisPolicy>& engine, const NodeMask&, std::uint32_t,
                 const NodeMask& css, const Choice&) const {
    return engine.solve(css);
  }
  Choice merge(const BitGraph&, Choice prelim, Choice compare, std::uint32_t) const {
    return pick_heavier(std::move(prelim), std::move(compare));
  }
  std::optional<Choice> restrict(const BitGraph& g, const Choice& level,
                                 const NodeMask& comp) const {
    Choice c{level.set & comp, 0.0};
    c.weight = g.weight_of(c.set);
    return c;
  }
};

/// Exact all-maximal-sets policy (A2).
struct ExactAmisPolicy {
  using Answer = Family;

  Family cus(const BitGraph& g, const NodeMask& c) const;
  Family combine(const BitGraph& g, const std::vector<std::shared_ptr<const Family>>& p) const;
  Family compare(PhaseTwo<ExactAmisPolicy>& engine, const NodeMask&, std::uint32_t,
                 const NodeMask& css, const Family&) const {
    return engine.solve(css);
  }
  /// Every compare set contains r. A preliminary set with no neighbor of r is a
  /// subset of the compare set obtained by adding r, so it is dropped; no other
  /// nesting is possible between two exact families of maximal sets.
  Family merge(const BitGraph& g, Family prelim, Family compare, std::uint32_t r) const;
  std::optional<Family> restrict(const BitGraph& g, const Family& level,
                                 const NodeMask& comp) const;
};

/// Heaviest member of a family; ties go to the lexicographically smallest id list.
Choice best_of(const BitGraph& g, const Family& f);

}  // namespace mwis::detail
