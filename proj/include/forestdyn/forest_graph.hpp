#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "forestdyn/forests.hpp"
#include "forestdyn/graph.hpp"

namespace forestdyn {

// F(G): vertex i is family.members[i]; i ~ j iff the forests differ by a
// single edge exchange.
struct ForestGraph {
  ForestFamily family;
  Graph graph;

  const Graph& base() const noexcept { return family.base; }
};

using VertexPair = std::pair<Vertex, Vertex>;

// Adjacency of a family, i < j, sorted. Bucketed kernel: every forest emits
// one Zobrist key per member edge (the forest with that edge removed);
// adjacent forests share exactly one key. Key generation runs in parallel.
std::vector<VertexPair> forest_adjacency(const ForestFamily& family);

// Serial reference: all pairs, symmetric difference exactly 2.
std::vector<VertexPair> forest_adjacency_pairwise(const ForestFamily& family);

ForestGraph build_forest_graph(const Graph& g, std::uint64_t budget = kDefaultForestBudget);
// From an already enumerated family.
ForestGraph forest_graph_of(ForestFamily family);

// |E(F1) \ E(F2)|. InputError if the forests come from different graphs.
std::size_t forest_distance(const MaximalForest& f1, const MaximalForest& f2);

// f1 = G_0, ..., G_d = f2 with consecutive terms one exchange apart and
// d = forest_distance(f1, f2). Each step removes the lowest-indexed edge of
// the current target not in f1 and reconnects with the lowest-indexed edge
// of f1 bridging the two pieces.
std::vector<MaximalForest> exchange_path(const Graph& g, const MaximalForest& f1,
                                         const MaximalForest& f2);

struct ConnectivityReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool connected = false;
  std::size_t diameter = 0;  // meaningful only when connected
};

// Builds F(G), checks it is connected and measures its diameter by BFS from
// every vertex (sources in parallel).
ConnectivityReport finite_connectivity_check(const Graph& g,
                                             std::uint64_t budget = kDefaultForestBudget);
ConnectivityReport connectivity_report(const Graph& h);

}  // namespace forestdyn
