#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "mwis/graph.hpp"

namespace mwis {

/// The eight algorithms of the toolkit.
///   A1 exact MWIS, A2 exact all-maximal-sets listing, A3 GWMIN, A6 GWMIN2,
///   A4/A7 hybrids taking greedy compare sets on the whole level graph,
///   A5/A8 hybrids taking greedy compare sets on the removed node's non-neighbors.
enum class Algorithm { A1, A2, A3, A4, A5, A6, A7, A8 };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::A1, Algorithm::A2, Algorithm::A3,
                                               Algorithm::A4, Algorithm::A5, Algorithm::A6,
                                               Algorithm::A7, Algorithm::A8};

std::string_view to_string(Algorithm a);
/// Accepts "a1".."a8" in either case; nullopt otherwise.
std::optional<Algorithm> parse_algorithm(std::string_view s);
bool is_exact(Algorithm a);

/// Cooperative cancellation for the long-running solvers; they throw
/// Error(Errc::Timeout) once the deadline has passed.
struct SolveControl {
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static SolveControl with_budget(double seconds);
  void check() const;
};

struct SolveResult {
  Algorithm algorithm = Algorithm::A1;
  IndependentSet solution;
  double runtime_seconds = 0.0;
  bool verified_independent = false;
  bool verified_maximal = false;
};

/// Runs any of the eight algorithms and verifies its output against `g`.
SolveResult run_algorithm(const WeightedGraph& g, Algorithm a, const SolveControl& ctl = {});

}  // namespace mwis
