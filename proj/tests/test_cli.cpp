#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mwis/graph_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  auto out = fs::temp_directory_path() / "mwis_cli_stdout.txt";
  std::string cmd = std::string(MWIS_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(raw), ss.str()};
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / "mwis_cli_test";
  TempDir() {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen, solve and enumerate") {
  TempDir dir;
  auto graph = dir / "g.txt";
  REQUIRE(run("gen --nodes 10 --density 0.4 --seed 5 --output " + graph).status == 0);
  auto g = mwis::read_graph_file(graph);
  CHECK(g.node_count() == 10);
  CHECK(g.edge_count() == 18);

  auto solved = run("solve --alg a1 --verify --input " + graph);
  CHECK(solved.status == 0);
  auto j = nlohmann::json::parse(solved.out);
  CHECK(j["algorithm"] == "A1");
  CHECK(j["verified_independent"] == true);
  CHECK(j["verified_maximal"] == true);
  auto members = j["members"].get<std::vector<mwis::NodeId>>();
  CHECK(mwis::is_independent(g, members));
  CHECK(j["total_weight"].get<double>() == doctest::Approx(g.weight_of(members)));

  auto to_file = dir / "r.json";
  CHECK(run("solve --alg A6 --input " + graph + " --output " + to_file).status == 0);
  CHECK(fs::exists(to_file));

  auto listed = run("enumerate --input " + graph);
  CHECK(listed.status == 0);
  auto e = nlohmann::json::parse(listed.out);
  CHECK(e["count"].get<std::size_t>() == e["collection"].size());
  CHECK(e["best"]["total_weight"].get<double>() == doctest::Approx(j["total_weight"].get<double>()));
}

TEST_CASE("verify and bench") {
  TempDir dir;
  REQUIRE(run("gen --nodes 14 --density 0.3 --seed 1 --output " + (dir / "a.txt")).status == 0);
  REQUIRE(run("gen --nodes 9 --density 0.6 --seed 2 --output " + (dir / "b.txt")).status == 0);

  auto v = run("verify --input " + (dir / "a.txt"));
  CHECK(v.status == 0);
  CHECK(nlohmann::json::parse(v.out)["ok"] == true);

  CHECK(run("verify --max-nodes 5 --input " + (dir / "a.txt")).status == 2);

  auto csv = dir / "out.csv";
  REQUIRE(run("bench --inputs " + dir.path.string() + " --algs a1,a3 --output " + csv).status == 0);
  std::ifstream in(csv);
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  CHECK(header.rfind("test_id,edges,nodes,density,A1_weight", 0) == 0);
  CHECK(first.rfind("1,22,9,", 0) == 0);
  CHECK(second.rfind("2,27,14,", 0) == 0);

  CHECK(run("bench --inputs " + (dir / "a.txt") + " --algs a3").status == 2);
}

TEST_CASE("input errors exit with 2") {
  TempDir dir;
  auto bad = dir / "bad.txt";
  std::ofstream(bad) << "p 3 0\nn 0 1\n";
  CHECK(run("solve --input " + bad).status == 2);
  CHECK(run("solve --input " + (dir / "missing.txt")).status == 2);
  CHECK(run("solve --alg a9 --input " + bad).status == 2);
  CHECK(run("solve").status == 2);
  CHECK(run("gen --nodes 5 --density 2").status == 2);
  CHECK(run("--help").status == 0);
}
