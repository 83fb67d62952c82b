#include "mwis/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace mwis {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  bool have_header = false;
  std::size_t want_nodes = 0, want_edges = 0;
  std::vector<std::pair<NodeId, Weight>> nodes;
  std::vector<Edge> edges;
  std::unordered_set<NodeId> seen;

  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto tok = split(line);
    if (tok.empty() || tok[0].front() == '#') continue;

    if (!have_header) {
      if (tok[0] != "p" || tok.size() != 3 || !parse_number(tok[1], want_nodes) ||
          !parse_number(tok[2], want_edges))
        throw Error(Errc::MalformedHeader, where(line_no) + "expected 'p <nodes> <edges>'");
      have_header = true;
      continue;
    }
    if (tok[0] == "n") {
      NodeId id = 0;
      if (tok.size() != 3 || !parse_number(tok[1], id))
        throw Error(Errc::MalformedHeader, where(line_no) + "expected 'n <id> <weight>'");
      double w = 0.0;
      if (!parse_number(tok[2], w) || !std::isfinite(w) || w <= 0.0)
        throw Error(Errc::BadWeight, where(line_no) + std::string(tok[2]));
      if (!seen.insert(id).second)
        throw Error(Errc::DuplicateNode, where(line_no) + "node " + std::to_string(id));
      nodes.emplace_back(id, w);
    } else if (tok[0] == "e") {
      NodeId u = 0, v = 0;
      if (tok.size() != 3 || !parse_number(tok[1], u) || !parse_number(tok[2], v))
        throw Error(Errc::MalformedHeader, where(line_no) + "expected 'e <u> <v>'");
      edges.emplace_back(u, v);
    } else if (tok[0] == "p") {
      throw Error(Errc::MalformedHeader, where(line_no) + "second header line");
    } else {
      throw Error(Errc::MalformedHeader, where(line_no) + "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw Error(Errc::MalformedHeader, "missing 'p' line");
  if (nodes.size() != want_nodes || edges.size() != want_edges)
    throw Error(Errc::CountMismatch, "header says " + std::to_string(want_nodes) + " nodes and " +
                                         std::to_string(want_edges) + " edges, file has " +
                                         std::to_string(nodes.size()) + " and " +
                                         std::to_string(edges.size()));
  for (auto [u, v] : edges)
    if (!seen.count(u) || !seen.count(v))
      throw Error(Errc::UnknownEndpoint,
                  "edge " + std::to_string(u) + " " + std::to_string(v));
  return build_graph(nodes, edges);
}

std::string serialize_graph(const WeightedGraph& g) {
  std::string out = "p " + std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
  char buf[64];
  for (auto id : g.nodes()) {
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, g.weight(id));
    out += "n " + std::to_string(id) + " ";
    out.append(buf, p);
    out += '\n';
  }
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

WeightedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

void write_graph_file(const std::filesystem::path& path, const WeightedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_graph(g);
}

}  // namespace mwis
