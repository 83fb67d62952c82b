#include "mwis/result.hpp"

#include <cctype>

#include "mwis/greedy.hpp"
#include "mwis/solvers.hpp"

namespace mwis {

std::string_view to_string(Algorithm a) {
  static constexpr std::string_view names[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8"};
  return names[static_cast<std::size_t>(a)];
}

std::optional<Algorithm> parse_algorithm(std::string_view s) {
  if (s.size() != 2 || std::tolower(static_cast<unsigned char>(s[0])) != 'a') return std::nullopt;
  if (s[1] < '1' || s[1] > '8') return std::nullopt;
  return static_cast<Algorithm>(s[1] - '1');
}

bool is_exact(Algorithm a) { return a == Algorithm::A1 || a == Algorithm::A2; }

SolveControl SolveControl::with_budget(double seconds) {
  SolveControl c;
  c.deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds));
  return c;
}

void SolveControl::check() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline)
    throw Error(Errc::Timeout, "time budget exhausted");
}

SolveResult run_algorithm(const WeightedGraph& g, Algorithm a, const SolveControl& ctl) {
  switch (a) {
    case Algorithm::A1: return solve_mwis(g, ctl);
    case Algorithm::A2: {
      auto t0 = std::chrono::steady_clock::now();
      SolveResult r;
      r.algorithm = a;
      r.solution = solve_amisl_best(g, ctl);
      r.runtime_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      r.verified_independent = is_independent(g, r.solution.members);
      r.verified_maximal = is_maximal_independent(g, r.solution.members);
      return r;
    }
    case Algorithm::A3:
    case Algorithm::A6: {
      auto t0 = std::chrono::steady_clock::now();
      SolveResult r;
      r.algorithm = a;
      r.solution = greedy_mis(g, a == Algorithm::A3 ? Selector::Gwmin : Selector::Gwmin2);
      r.runtime_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      r.verified_independent = is_independent(g, r.solution.members);
      r.verified_maximal = is_maximal_independent(g, r.solution.members);
      return r;
    }
    case Algorithm::A4: return solve_composed(g, Selector::Gwmin, Scope::WholeSubgraph, ctl);
    case Algorithm::A5: return solve_composed(g, Selector::Gwmin, Scope::NonNeighborSubgraph, ctl);
    case Algorithm::A7: return solve_composed(g, Selector::Gwmin2, Scope::WholeSubgraph, ctl);
    case Algorithm::A8: return solve_composed(g, Selector::Gwmin2, Scope::NonNeighborSubgraph, ctl);
  }
  throw Error(Errc::NotApplicable, "unknown algorithm");
}

}  // namespace mwis
