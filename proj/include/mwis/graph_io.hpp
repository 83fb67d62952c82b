#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mwis/graph.hpp"

namespace mwis {

/// Text format, one record per line:
///   # comment
///   p <node_count> <edge_count>   (first non-comment line)
///   n <id> <weight>
///   e <u> <v>
/// Errors: MalformedHeader, CountMismatch, DuplicateNode, BadWeight,
/// UnknownEndpoint, plus anything build_graph rejects.
WeightedGraph parse_graph(std::string_view text);

/// Nodes then edges in ascending id order; weights use the shortest
/// representation that reads back exactly.
std::string serialize_graph(const WeightedGraph& g);

WeightedGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const WeightedGraph& g);

}  // namespace mwis
