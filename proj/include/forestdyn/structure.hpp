#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "forestdyn/graph.hpp"

namespace forestdyn {

// Blocks of the connectivity partition, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);
// component_of[v] = index of v's block in components(g).
std::vector<std::size_t> component_labels(const Graph& g);
std::size_t component_count(const Graph& g);
// Components of g with the `removed` vertices deleted, same conventions.
std::vector<std::vector<Vertex>> components_avoiding(const Graph& g,
                                                     std::span<const Vertex> removed);
bool is_connected(const Graph& g);

// m - n + c. Equals |E(G) \ E(F)| for every maximal forest F.
std::size_t cyclomatic_number(const Graph& g);

// Isthmi: edges on no cycle. Single-pass lowpoint DFS.
EdgeSubset bridges(const Graph& g);
std::vector<Vertex> isolated_vertices(const Graph& g);

// The cycle when the cyclomatic number is exactly 1.
std::optional<Cycle> unique_cycle(const Graph& g);

struct CycleList {
  std::vector<Cycle> cycles;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultCycleLimit = 1'000'000;

// All simple cycles, each reported once, starting from its smallest vertex
// and walking towards the smaller of that vertex's two cycle neighbours.
// Stops after `limit` cycles and sets `truncated`.
CycleList enumerate_cycles(const Graph& g, std::size_t limit = kDefaultCycleLimit);
// Streaming form; the visitor returns false to stop early. Returns false
// iff the visitor stopped the walk.
bool for_each_cycle(const Graph& g, const std::function<bool(const Cycle&)>& visit);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<std::uint8_t> coloring;  // side per vertex when bipartite
  std::optional<Cycle> odd_cycle;      // witness when not
};

BipartiteResult is_bipartite(const Graph& g);

inline constexpr std::size_t kDefaultCliqueVertexLimit = 200;

// Exact maximum clique by branch and bound with a greedy colouring bound.
// Returns the clique sorted. ResourceError above `vertex_limit` vertices.
std::vector<Vertex> max_clique(const Graph& g, std::size_t vertex_limit = kDefaultCliqueVertexLimit);
bool is_clique(const Graph& g, std::span<const Vertex> vertices);

enum class HamiltonStatus { Found, NoneExists };

struct HamiltonResult {
  HamiltonStatus status = HamiltonStatus::NoneExists;
  std::optional<Cycle> cycle;
};

inline constexpr std::uint64_t kDefaultHamiltonNodeBudget = 50'000'000;

// Backtracking search with degree pruning. NoneExists is a proof; running
// out of `node_budget` search nodes throws ResourceError.
HamiltonResult hamiltonian_cycle(const Graph& g,
                                 std::uint64_t node_budget = kDefaultHamiltonNodeBudget);

// Vertex (i, j) of the product is i * |h| + j.
Graph cartesian_product(const Graph& g, const Graph& h);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Shortest-path distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

}  // namespace forestdyn
