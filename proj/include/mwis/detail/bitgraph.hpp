#pragma once

// Dense bitset view of a WeightedGraph. Node i of the view is the i-th
// smallest id of the source graph, so index order and id order agree and
// every smallest-id tie-break can be taken on indices directly.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis::detail {

class NodeMask {
 public:
  static constexpr std::uint32_t npos = ~std::uint32_t{0};

  NodeMask() = default;
  explicit NodeMask(std::size_t bits) : nwords_(static_cast<std::uint32_t>((bits + 63) / 64)) {
    if (nwords_ > kInline) heap_.assign(nwords_, 0);
  }

  std::uint32_t words() const { return nwords_; }
  std::uint64_t* data() { return nwords_ > kInline ? heap_.data() : inline_.data(); }
  const std::uint64_t* data() const {
    return nwords_ > kInline ? heap_.data() : inline_.data();
  }

  void set(std::uint32_t i) { data()[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint32_t i) { data()[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::uint32_t i) const { return (data()[i >> 6] >> (i & 63)) & 1u; }

  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (std::uint32_t w = 0; w < nwords_; ++w) c += std::popcount(data()[w]);
    return c;
  }
  bool any() const {
    for (std::uint32_t w = 0; w < nwords_; ++w)
      if (data()[w]) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Lowest set index, or npos.
  std::uint32_t first() const { return next(0); }
  /// Lowest set index >= from, or npos.
  std::uint32_t next(std::uint32_t from) const {
    std::uint32_t w = from >> 6;
    if (w >= nwords_) return npos;
    std::uint64_t bits = data()[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (bits) return (w << 6) + static_cast<std::uint32_t>(std::countr_zero(bits));
      if (++w >= nwords_) return npos;
      bits = data()[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    const auto* d = data();
    for (std::uint32_t w = 0; w < nwords_; ++w) {
      std::uint64_t bits = d[w];
      while (bits) {
        f((w << 6) + static_cast<std::uint32_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  NodeMask& operator&=(const NodeMask& o) {
    for (std::uint32_t w = 0; w < nwords_; ++w) data()[w] &= o.data()[w];
    return *this;
  }
  NodeMask& operator|=(const NodeMask& o) {
    for (std::uint32_t w = 0; w < nwords_; ++w) data()[w] |= o.data()[w];
    return *this;
  }
  /// this &= ~o
  NodeMask& subtract(const NodeMask& o) {
    for (std::uint32_t w = 0; w < nwords_; ++w) data()[w] &= ~o.data()[w];
    return *this;
  }
  friend NodeMask operator&(NodeMask a, const NodeMask& b) { return a &= b; }
  friend NodeMask operator|(NodeMask a, const NodeMask& b) { return a |= b; }
  friend NodeMask minus(NodeMask a, const NodeMask& b) { return a.subtract(b); }

  bool intersects(const NodeMask& o) const {
    for (std::uint32_t w = 0; w < nwords_; ++w)
      if (data()[w] & o.data()[w]) return true;
    return false;
  }
  bool is_subset_of(const NodeMask& o) const {
    for (std::uint32_t w = 0; w < nwords_; ++w)
      if (data()[w] & ~o.data()[w]) return false;
    return true;
  }
  std::uint32_t count_and(const NodeMask& o) const {
    std::uint32_t c = 0;
    for (std::uint32_t w = 0; w < nwords_; ++w) c += std::popcount(data()[w] & o.data()[w]);
    return c;
  }

  friend bool operator==(const NodeMask& a, const NodeMask& b) {
    if (a.nwords_ != b.nwords_) return false;
    for (std::uint32_t w = 0; w < a.nwords_; ++w)
      if (a.data()[w] != b.data()[w]) return false;
    return true;
  }
  /// Word-wise order; only used for canonical sorting.
  friend bool operator<(const NodeMask& a, const NodeMask& b) {
    for (std::uint32_t w = a.nwords_; w-- > 0;)
      if (a.data()[w] != b.data()[w]) return a.data()[w] < b.data()[w];
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint32_t w = 0; w < nwords_; ++w) {
      h ^= data()[w] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static constexpr std::uint32_t kInline = 4;
  std::uint32_t nwords_ = 0;
  std::array<std::uint64_t, kInline> inline_{};
  std::vector<std::uint64_t> heap_;
};

struct NodeMaskHash {
  std::size_t operator()(const NodeMask& m) const { return m.hash(); }
};

struct BitGraph {
  NodeSet ids;
  std::vector<Weight> weights;
  std::vector<NodeMask> adj;

  static BitGraph from(const WeightedGraph& g);

  std::uint32_t size() const { return static_cast<std::uint32_t>(ids.size()); }
  NodeMask empty_mask() const { return NodeMask(ids.size()); }
  NodeMask full_mask() const;

  NodeSet to_ids(const NodeMask& m) const;
  /// Throws UnknownNode for ids outside the graph.
  NodeMask to_mask(std::span<const NodeId> s) const;
  /// Sum over members in ascending index order.
  Weight weight_of(const NodeMask& m) const;
  std::uint32_t degree_in(std::uint32_t v, const NodeMask& m) const {
    return adj[v].count_and(m);
  }
  std::size_t edge_count(const NodeMask& m) const;
  WeightedGraph to_graph(const NodeMask& m) const;
};

/// Components of the subgraph induced by `m`, ordered by smallest member.
std::vector<NodeMask> components(const BitGraph& g, const NodeMask& m);

/// Component of `m` containing `v`.
NodeMask component_of(const BitGraph& g, const NodeMask& m, std::uint32_t v);

}  // namespace mwis::detail
