#include <cmath>

#include "doctest.h"
#include "mwis/oracle.hpp"
#include "mwis/solvers.hpp"
#include "support.hpp"

using namespace mwis;
using testing::make;
using testing::path;
using testing::unit;

namespace {

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::EmptyGraph;
}

MISCollection family(std::vector<NodeSet> sets) { return make_collection(std::move(sets)); }

}  // namespace

TEST_CASE("cus_mwis") {
  CHECK(cus_mwis(make({5}, {})) == IndependentSet{{0}, 5});
  CHECK(cus_mwis(make({2, 5}, {{0, 1}})) == IndependentSet{{1}, 5});
  CHECK(cus_mwis(testing::star(2, {1, 1, 1})) == IndependentSet{{1, 2, 3}, 3});
  // ties go to the side holding the smaller id
  CHECK(cus_mwis(make({3, 3}, {{0, 1}})).members == NodeSet{0});
  CHECK(cus_mwis(testing::star(3, {1, 1, 1})).members == NodeSet{0});
  CHECK(cus_mwis(make({1, 1, 2}, {{2, 0}, {2, 1}})).members == NodeSet{0, 1});
  CHECK(error_of([] { cus_mwis(path(4)); }) == Errc::NotCus);
  CHECK(error_of([] { cus_mwis(unit(2, {})); }) == Errc::NotCus);
}

TEST_CASE("cus_amis") {
  CHECK(cus_amis(make({5}, {})) == family({{0}}));
  CHECK(cus_amis(unit(2, {{0, 1}})) == family({{0}, {1}}));
  CHECK(cus_amis(testing::star(1, {1, 1})) == family({{0}, {1, 2}}));
  CHECK(error_of([] { cus_amis(testing::complete(3)); }) == Errc::NotCus);
}

TEST_CASE("combine_components") {
  std::vector<IndependentSet> parts{{{1}, 5}, {{2}, 1}};
  CHECK(combine_components(parts) == IndependentSet{{1, 2}, 6});
  CHECK(combine_components(std::vector<IndependentSet>{}) == IndependentSet{});
  std::vector<IndependentSet> one{{{3, 7}, 2.5}};
  CHECK(combine_components(one) == one[0]);
  std::vector<IndependentSet> overlap{{{1, 2}, 2}, {{2}, 1}};
  CHECK(error_of([&] { combine_components(overlap); }) == Errc::OverlappingComponents);
}

TEST_CASE("combine_amis") {
  std::vector<MISCollection> edges{family({{0}, {1}}), family({{2}, {3}})};
  CHECK(combine_amis(edges) == family({{0, 2}, {0, 3}, {1, 2}, {1, 3}}));

  std::vector<MISCollection> one{family({{0, 2}, {1}})};
  CHECK(combine_amis(one) == one[0]);

  auto two = testing::triangles(2);
  std::vector<MISCollection> tri{oracle_amis(induced_subgraph(two, NodeSet{0, 1, 2})),
                                 oracle_amis(induced_subgraph(two, NodeSet{3, 4, 5}))};
  auto combined = combine_amis(tri);
  CHECK(combined.size() == 9);
  CHECK(combined == oracle_amis(two));

  std::vector<MISCollection> overlap{family({{0}}), family({{0, 1}})};
  CHECK(error_of([&] { combine_amis(overlap); }) == Errc::OverlappingComponents);
}

TEST_CASE("special_union") {
  CHECK(special_union(family({{0}}), family({{0, 1}})) == family({{0, 1}}));
  auto x = family({{0, 2}, {1}});
  CHECK(special_union(x, family({})) == x);
  CHECK(special_union(family({{0, 1}}), family({{1, 2}})) == family({{0, 1}, {1, 2}}));
  CHECK(special_union(x, x) == x);
  CHECK(special_union(family({{0, 1}, {2}}), family({{2, 3}, {0}})) ==
        special_union(family({{2, 3}, {0}}), family({{0, 1}, {2}})));
}

TEST_CASE("special_union properties") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto random_family = [&] {
      std::vector<NodeSet> sets;
      for (int k = 0; k < 1 + int(rng() % 6); ++k) {
        NodeSet s;
        for (NodeId v = 0; v < 6; ++v)
          if (rng() % 3 == 0) s.push_back(v);
        sets.push_back(s);
      }
      return make_collection(sets);
    };
    auto a = random_family(), b = random_family();
    auto u = special_union(a, b);
    CHECK(u == special_union(b, a));
    CHECK(special_union(u, u) == u);
    for (auto& s : u.sets)
      for (auto& r : u.sets)
        if (&s != &r) CHECK_FALSE(std::includes(r.begin(), r.end(), s.begin(), s.end()));
    // every input set is covered by an output set
    for (auto* f : {&a, &b})
      for (auto& s : f->sets) {
        bool covered = false;
        for (auto& r : u.sets) covered |= std::includes(r.begin(), r.end(), s.begin(), s.end());
        CHECK(covered);
      }
  }
}

TEST_CASE("compare_set") {
  int calls = 0;
  MwisStrategy counting = [&](const WeightedGraph& g) {
    ++calls;
    return solve_mwis(g).solution;
  };
  CHECK(compare_set(testing::star(4, {1, 1}), 0, counting) == IndependentSet{{0}, 4});
  CHECK(compare_set(make({1, 7, 1}, {{0, 1}, {1, 2}}), 1, counting) == IndependentSet{{1}, 7});
  CHECK(calls == 0);

  // isolated node 0 beside a 5-cycle: the rest is not a base graph
  auto g = unit(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  auto c = compare_set(g, 0, counting);
  CHECK(calls == 1);
  CHECK(c.members.size() == 3);
  CHECK(c.members.front() == 0);
  CHECK(c.total_weight == 3.0);

  CHECK(error_of([&] { compare_set(g, 9, counting); }) == Errc::UnknownNode);
}

TEST_CASE("solve_mwis examples") {
  auto empty = solve_mwis(unit(0, {}));
  CHECK(empty.solution == IndependentSet{});
  CHECK(empty.verified_independent);

  auto c4 = solve_mwis(make({1, 10, 1, 10}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK(c4.solution == IndependentSet{{1, 3}, 20});
  CHECK(c4.algorithm == Algorithm::A1);

  auto c5 = solve_mwis(testing::cycle(5));
  CHECK(c5.solution.total_weight == 2.0);
  CHECK(c5.verified_independent);
  CHECK(c5.verified_maximal);
}

TEST_CASE("solve_amisl examples") {
  auto empty = solve_amisl(unit(0, {}));
  CHECK(empty.collection == family({{}}));
  CHECK(empty.best == IndependentSet{});

  CHECK(solve_amisl(testing::complete(3)).collection == family({{0}, {1}, {2}}));
  CHECK(solve_amisl(path(4)).collection == family({{0, 2}, {0, 3}, {1, 3}}));
  CHECK(oracle_amis(path(4)) == family({{0, 2}, {0, 3}, {1, 3}}));
}

TEST_CASE("exact solvers agree with the oracles") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto g = testing::random_graph(4 + seed % 11, 0.1 * double(1 + seed % 9), seed);
    auto best = oracle_mwis(g);
    auto a1 = solve_mwis(g);
    auto a2 = solve_amisl(g);
    CHECK(same_weight(a1.solution.total_weight, best.total_weight));
    CHECK(same_weight(a2.best.total_weight, best.total_weight));
    CHECK(a1.verified_maximal);
    CHECK(a2.collection == oracle_amis(g));

    // best is a member of the family and is its heaviest
    CHECK(std::binary_search(a2.collection.sets.begin(), a2.collection.sets.end(),
                             a2.best.members));
    for (auto& s : a2.collection.sets) CHECK_FALSE(heavier(g.weight_of(s), a2.best.total_weight));

    std::size_t size = 0;
    CHECK(solve_amisl_best(g, {}, &size) == a2.best);
    CHECK(size == a2.collection.size());
  }
}

TEST_CASE("Moon-Moser ceiling") {
  for (std::size_t k = 1; k <= 4; ++k)
    CHECK(solve_amisl(testing::triangles(k)).collection.size() == std::size_t(std::pow(3, k)));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::size_t n = 3 * (1 + seed % 4);
    auto g = testing::random_graph(n, 0.2 + 0.1 * double(seed % 5), seed);
    CHECK(double(solve_amisl(g).collection.size()) <= std::pow(3.0, double(n) / 3.0));
  }
}

TEST_CASE("relabeling and scaling invariance") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = testing::random_graph(6 + seed % 20, 0.15 + 0.1 * double(seed % 6), seed);
    auto base = solve_mwis(g).solution;

    auto moved = testing::relabel(g, testing::random_permutation(g.node_count(), seed + 99));
    CHECK(same_weight(solve_mwis(moved).solution.total_weight, base.total_weight));
    CHECK(same_weight(solve_amisl_best(moved).total_weight, base.total_weight));

    for (double c : {0.001, 3.0, 1000.0}) {
      auto s = solve_mwis(testing::scaled(g, c)).solution;
      CHECK(s.members == base.members);
      CHECK(same_weight(s.total_weight, c * base.total_weight));
    }
  }
}

TEST_CASE("solvers are deterministic") {
  auto g = testing::random_graph(30, 0.3, 17);
  CHECK(solve_mwis(g).solution == solve_mwis(g).solution);
  CHECK(solve_amisl(g).collection == solve_amisl(g).collection);
}

TEST_CASE("an expired budget stops the exact solvers") {
  auto g = testing::random_graph(60, 0.3, 4);
  SolveControl expired;
  expired.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK(error_of([&] { solve_mwis(g, expired); }) == Errc::Timeout);
  CHECK(error_of([&] { solve_amisl(g, expired); }) == Errc::Timeout);
}
