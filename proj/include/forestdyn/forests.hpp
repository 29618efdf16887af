#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "forestdyn/graph.hpp"

namespace forestdyn {

inline constexpr std::uint64_t kDefaultForestBudget = 1'000'000;
inline constexpr std::size_t kDefaultBruteForceEdges = 20;

// Identity token for a labeled graph (order + edge table). Forests remember
// the fingerprint of the graph they were validated against.
std::uint64_t fingerprint(const Graph& g);

bool is_acyclic(const Graph& g, const EdgeSubset& s);
// Acyclic, and every edge outside `s` closes a cycle with it.
bool is_maximal_forest(const Graph& g, const EdgeSubset& s);

// An edge subset checked to be a maximal forest of its base graph.
class MaximalForest {
 public:
  // Throws InputError unless `edges` is a maximal forest of `base`.
  MaximalForest(const Graph& base, EdgeSubset edges);

  const EdgeSubset& edges() const noexcept { return edges_; }
  std::uint64_t base_fingerprint() const noexcept { return base_; }
  std::vector<EdgeIndex> edge_indices() const { return edges_.indices(); }

  friend bool operator==(const MaximalForest&, const MaximalForest&) = default;

 private:
  MaximalForest(std::uint64_t base, EdgeSubset edges) : base_(base), edges_(std::move(edges)) {}
  friend struct ForestFamily;

  std::uint64_t base_ = 0;
  EdgeSubset edges_;
};

// All maximal forests of `base`, sorted lexicographically by edge-index list.
struct ForestFamily {
  Graph base;
  std::vector<EdgeSubset> members;

  std::size_t size() const noexcept { return members.size(); }
  MaximalForest at(std::size_t i) const;
  std::optional<std::size_t> find(const EdgeSubset& s) const;
};

// Include/exclude search over the edge order with bridge forcing; members
// come out in lexicographic order. The exact count is computed first and
// ResourceError (carrying it) is thrown when it exceeds `budget`.
ForestFamily maximal_forests(const Graph& g, std::uint64_t budget = kDefaultForestBudget);

// Oracle: tests every one of the 2^m edge subsets. ResourceError if m > max_edges.
ForestFamily brute_force_maximal_forests(const Graph& g,
                                         std::size_t max_edges = kDefaultBruteForceEdges);

// Greedy completion over the edge order. InputError if `partial` has a cycle.
MaximalForest extend_to_maximal(const Graph& g, const EdgeSubset& partial);
EdgeSubset extend_to_maximal_edges(const Graph& g, const EdgeSubset& partial);

}  // namespace forestdyn
