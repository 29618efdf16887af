#pragma once

#include <span>
#include <utility>
#include <vector>

#include "forestdyn/forests.hpp"
#include "forestdyn/graph.hpp"

namespace forestdyn {

// Result of a Whitney operation. edge_map[e] is the index in `graph` of old
// edge e; vertex_map[v] is the new vertex carrying old vertex v.
struct WhitneyResult {
  Graph graph;
  std::vector<EdgeIndex> edge_map;
  std::vector<Vertex> vertex_map;
};

// Merges each pair's second vertex into its first, in order. Each pair must
// lie in two distinct components of the graph as it stands at that point.
// Merged classes are renumbered by their smallest original vertex.
WhitneyResult whitney_identify(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs);

// v must be a cut vertex; `side` a union of components of g - v inside v's
// component, leaving at least one such component behind. The edges from v
// into `side` move to a new vertex numbered g.order().
WhitneyResult whitney_split(const Graph& g, Vertex v, std::span<const Vertex> side);

// {u, v} separates g with `side` = V(G_2) (containing u and v) and at least
// one vertex outside `side`. An edge uv stays with G_1. The G_2 edges are
// reattached with u and v exchanged.
WhitneyResult whitney_twist(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> side);

enum class WhitneyKind { Identify, Split, Twist };

struct WhitneyMove {
  WhitneyKind kind = WhitneyKind::Identify;
  std::vector<std::pair<Vertex, Vertex>> pairs;  // Identify
  Vertex u = 0;                                  // Split vertex, or first twist vertex
  Vertex v = 0;                                  // second twist vertex
  std::vector<Vertex> side;                      // Split and Twist
};

// Every single identification, split and twist that applies to g, in a fixed
// order. Splits and twists range over all proper unions of the pieces left
// by removing the cut vertex or separating pair.
std::vector<WhitneyMove> applicable_whitney_moves(const Graph& g);
WhitneyResult apply_whitney(const Graph& g, const WhitneyMove& move);

// Forest family of `before` pushed through edge_map, compared as a set with
// the family of `after`.
bool same_forest_family(const Graph& before, const Graph& after,
                        const std::vector<EdgeIndex>& edge_map,
                        std::uint64_t budget = kDefaultForestBudget);

}  // namespace forestdyn
