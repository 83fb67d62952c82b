#include <cmath>

#include "doctest.h"
#include "mwis/oracle.hpp"
#include "support.hpp"

using namespace mwis;
using testing::make;
using testing::unit;

TEST_CASE("oracle_mwis examples") {
  CHECK(oracle_mwis(testing::cycle(5)).total_weight == 2.0);
  CHECK(oracle_mwis(make({1, 2, 3}, {{0, 1}, {1, 2}, {0, 2}})) == IndependentSet{{2}, 3});
  CHECK(oracle_mwis(unit(0, {})) == IndependentSet{});
  CHECK_THROWS_AS(oracle_mwis(unit(25, {})), Error);
  try {
    oracle_mwis(unit(25, {}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
  CHECK(oracle_mwis(unit(25, {}), {30}).members.size() == 25);
}

TEST_CASE("oracle_mwis tie-break is lexicographic") {
  // {0,2}, {0,3} and {1,3} all weigh 2
  CHECK(oracle_mwis(testing::path(4)).members == NodeSet{0, 2});
  // {0,3} and {2} both weigh 3; the sorted list {0,3} comes first
  CHECK(oracle_mwis(make({1, 1, 3, 2}, {{0, 1}, {1, 2}, {2, 3}, {0, 2}})).members == NodeSet{0, 3});
}

TEST_CASE("oracle_amis examples") {
  CHECK(oracle_amis(unit(2, {{0, 1}})) == make_collection({{0}, {1}}));
  CHECK(oracle_amis(unit(0, {})) == make_collection({{}}));
  CHECK(oracle_amis(testing::triangles(2)).size() == 9);
  try {
    oracle_amis(unit(21, {}));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}

TEST_CASE("the two oracles cross-check") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    std::size_t n = 1 + seed % 15;
    auto g = testing::random_graph(n, double(seed % 10) / 9.0, seed);
    auto family = oracle_amis(g);
    Weight best = 0;
    for (auto& s : family.sets) {
      CHECK(is_maximal_independent(g, s));
      best = std::max(best, g.weight_of(s));
    }
    CHECK(same_weight(oracle_mwis(g).total_weight, best));

    for (std::size_t i = 0; i < family.sets.size(); ++i)
      for (std::size_t j = 0; j < family.sets.size(); ++j)
        if (i != j)
          CHECK_FALSE(std::includes(family.sets[j].begin(), family.sets[j].end(),
                                    family.sets[i].begin(), family.sets[i].end()));
    if (n % 3 == 0) CHECK(double(family.size()) <= std::pow(3.0, double(n) / 3.0) + 1e-9);
  }
}
