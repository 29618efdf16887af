#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "forestdyn/forests.hpp"
#include "forestdyn/graph.hpp"

namespace forestdyn {

// Edge-list text: one edge per line as two whitespace-separated vertex
// tokens; '#' starts a comment line; an optional "vertices N" line declares
// the order so isolated vertices can exist. When every token is a decimal
// integer the tokens are the vertex indices (default order = max + 1);
// otherwise tokens are numbered in first-seen order and kept as names.
// Throws ParseError with line/column.
Graph parse_edge_list(std::string_view text);

// Undirected DOT subset: [strict] graph [id] { stmt; ... } with node
// statements, `a -- b -- c` chains and attribute lists (ignored).
Graph parse_dot(std::string_view text);

// Picks DOT when the first significant token is `graph` or `strict`.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

// "vertices N" header then one edge per line, by vertex name when the graph
// carries names.
std::string write_edge_list(const Graph& g);
// `labels`, when non-empty, become the DOT node labels.
std::string write_dot(const Graph& g, const std::vector<std::string>& labels = {});

// Sorted edge indices, space separated.
std::string format_edge_indices(const EdgeSubset& s);
// "{a-b, c-d}" using vertex names.
std::string format_edge_names(const Graph& g, const EdgeSubset& s);

// One forest per line as its sorted edge-index list.
std::string write_family(const ForestFamily& family);

}  // namespace forestdyn
