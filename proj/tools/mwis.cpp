#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mwis/bench.hpp"
#include "mwis/generator.hpp"
#include "mwis/graph_io.hpp"
#include "mwis/greedy.hpp"
#include "mwis/oracle.hpp"
#include "mwis/solvers.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace mwis;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

// Thrown for bad command-line values and unreadable inputs.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Algorithm> parse_algorithms(const std::string& spec) {
  if (spec == "all") return {std::begin(kAllAlgorithms), std::end(kAllAlgorithms)};
  std::vector<Algorithm> out;
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) {
    auto a = parse_algorithm(item);
    if (!a) throw InputError("unknown algorithm '" + item + "'");
    if (std::find(out.begin(), out.end(), *a) == out.end()) out.push_back(*a);
  }
  if (out.empty()) throw InputError("no algorithms given");
  return out;
}

json set_json(const IndependentSet& s) {
  return {{"members", s.members}, {"total_weight", s.total_weight}};
}

void emit(const json& j, const std::string& output) {
  if (output.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(output);
  if (!out) throw InputError("cannot write " + output);
  out << j.dump(2) << '\n';
}

std::vector<fs::path> list_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const auto& item : inputs) {
    fs::path p(item);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::directory_iterator(p))
        if (e.is_regular_file()) found.push_back(e.path());
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(p)) {
      out.push_back(p);
    } else {
      throw InputError("no such file or directory: " + item);
    }
  }
  return out;
}

struct SolveArgs {
  std::string alg = "a1";
  std::string input, output;
  bool verify = false;
  double budget = 0.0;
};

int cmd_solve(const SolveArgs& a) {
  auto alg = parse_algorithm(a.alg);
  if (!alg) throw InputError("unknown algorithm '" + a.alg + "'");
  auto g = read_graph_file(a.input);
  auto ctl = a.budget > 0 ? SolveControl::with_budget(a.budget) : SolveControl{};
  auto r = run_algorithm(g, *alg, ctl);
  json j{{"algorithm", to_string(r.algorithm)},
         {"members", r.solution.members},
         {"total_weight", r.solution.total_weight},
         {"runtime_seconds", r.runtime_seconds},
         {"verified_independent", r.verified_independent},
         {"verified_maximal", r.verified_maximal}};
  emit(j, a.output);
  if (a.verify && !(r.verified_independent && r.verified_maximal)) return kMismatch;
  return kOk;
}

int cmd_enumerate(const std::string& input, const std::string& output) {
  auto g = read_graph_file(input);
  auto r = solve_amisl(g);
  json j{{"count", r.collection.size()},
         {"collection", r.collection.sets},
         {"best", set_json(r.best)},
         {"runtime_seconds", r.runtime_seconds}};
  emit(j, output);
  return kOk;
}

int cmd_gen(const GeneratorSpec& spec, const std::string& output) {
  auto g = generate_graph(spec);
  if (output.empty())
    std::cout << serialize_graph(g);
  else
    write_graph_file(output, g);
  return kOk;
}

struct BenchArgs {
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> suite_seed;
  std::string algs = "all";
  double budget = 1800.0;
  std::string output;
  bool serial = false;
};

int cmd_bench(const BenchArgs& a) {
  std::vector<WeightedGraph> graphs;
  if (a.suite_seed) graphs = build_reference_suite(*a.suite_seed);
  for (const auto& p : list_inputs(a.inputs)) graphs.push_back(read_graph_file(p));
  auto algs = parse_algorithms(a.algs);
  auto rows = run_benchmark(graphs, algs,
                            {a.budget, a.serial ? Execution::Serial : Execution::Parallel});
  if (a.output.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream out(a.output);
    if (!out) throw InputError("cannot write " + a.output);
    write_csv(out, rows);
  }
  return kOk;
}

int cmd_verify(const std::string& input, std::size_t max_nodes, const std::string& algs_spec) {
  auto g = read_graph_file(input);
  auto algs = parse_algorithms(algs_spec);
  OracleConfig cfg{max_nodes};
  auto best = oracle_mwis(g, cfg);
  auto family = oracle_amis(g, cfg);

  json report{{"nodes", g.node_count()},
              {"edges", g.edge_count()},
              {"oracle", set_json(best)},
              {"oracle_family_size", family.size()}};
  bool ok = true;
  json runs = json::array();
  for (auto a : algs) {
    auto r = run_algorithm(g, a);
    std::vector<std::string> problems;
    if (!r.verified_independent) problems.push_back("not independent");
    if (!r.verified_maximal) problems.push_back("not maximal");
    if (heavier(r.solution.total_weight, best.total_weight)) problems.push_back("above the optimum");
    if (is_exact(a) && !same_weight(r.solution.total_weight, best.total_weight))
      problems.push_back("not optimal");
    if (a == Algorithm::A2 && !(solve_amisl(g).collection == family))
      problems.push_back("family differs from the enumeration");
    if (a == Algorithm::A3 || a == Algorithm::A6) {
      auto s = a == Algorithm::A3 ? Selector::Gwmin : Selector::Gwmin2;
      if (heavier(greedy_bound(g, s), r.solution.total_weight)) problems.push_back("below the bound");
    }
    ok = ok && problems.empty();
    runs.push_back({{"algorithm", to_string(a)},
                    {"total_weight", r.solution.total_weight},
                    {"ok", problems.empty()},
                    {"problems", problems}});
  }
  report["runs"] = runs;
  report["ok"] = ok;
  std::cout << report.dump(2) << '\n';
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum weight independent set solvers and benchmark tools"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve one graph file");
  s->add_option("--alg", solve.alg, "a1..a8")->default_val("a1");
  s->add_option("--input", solve.input)->required();
  s->add_option("--output", solve.output, "write the result here instead of stdout");
  s->add_option("--budget", solve.budget, "seconds; 0 means unlimited");
  s->add_flag("--verify", solve.verify, "exit 1 unless the set is independent and maximal");

  std::string enum_input, enum_output;
  auto* e = app.add_subcommand("enumerate", "List all maximal independent sets");
  e->add_option("--input", enum_input)->required();
  e->add_option("--output", enum_output);

  GeneratorSpec spec;
  std::string gen_output;
  auto* g = app.add_subcommand("gen", "Generate a random weighted graph");
  g->add_option("--nodes", spec.node_count)->required();
  g->add_option("--density", spec.density)->required();
  g->add_option("--wmin", spec.weight_low)->default_val(0.1);
  g->add_option("--wmax", spec.weight_high)->default_val(100.0);
  g->add_option("--seed", spec.seed)->default_val(0);
  g->add_option("--output", gen_output);

  BenchArgs bench;
  std::uint64_t suite_seed = 0;
  auto* b = app.add_subcommand("bench", "Run algorithms over many graphs and write CSV");
  b->add_option("--inputs", bench.inputs, "graph files or directories");
  auto* suite_opt = b->add_option("--suite", suite_seed, "also run the 43-graph reference suite");
  b->add_option("--algs", bench.algs, "comma list or 'all'")->default_val("all");
  b->add_option("--budget", bench.budget, "seconds per run")->default_val(1800.0);
  b->add_option("--output", bench.output);
  b->add_flag("--serial", bench.serial, "run one job at a time");

  std::string verify_input, verify_algs = "all";
  std::size_t max_nodes = 20;
  auto* v = app.add_subcommand("verify", "Check algorithms against brute force");
  v->add_option("--input", verify_input)->required();
  v->add_option("--max-nodes", max_nodes)->default_val(20);
  v->add_option("--algs", verify_algs)->default_val("all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*e) return cmd_enumerate(enum_input, enum_output);
    if (*g) return cmd_gen(spec, gen_output);
    if (*b) {
      if (*suite_opt) bench.suite_seed = suite_seed;
      return cmd_bench(bench);
    }
    if (*v) return cmd_verify(verify_input, max_nodes, verify_algs);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return err.code() == Errc::Timeout ? kMismatch : kInputError;
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kInputError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kInputError;
  }
  return kOk;
}
