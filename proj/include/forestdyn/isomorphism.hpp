#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "forestdyn/graph.hpp"

namespace forestdyn {

struct IsoOptions {
  // Largest order handled by the generic refinement + backtracking path.
  // Complete and edgeless graphs are recognized at any order.
  std::size_t max_vertices = 12;
  // Search-tree leaves explored before giving up.
  std::uint64_t leaf_budget = 2'000'000;
};

struct CanonicalForm {
  std::size_t order = 0;
  std::vector<Edge> edges;  // sorted, in canonical numbering

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // position[v] = canonical index of vertex v.
  std::vector<Vertex> position;
};

// Identical for isomorphic inputs. ResourceError on the generic path above
// options.max_vertices or when the leaf budget runs out.
CanonicalLabeling canonical_labeling(const Graph& g, const IsoOptions& options = {});
CanonicalForm canonical_form(const Graph& g, const IsoOptions& options = {});
Graph canonical_graph(const Graph& g, const IsoOptions& options = {});

// map[v] = image in h of vertex v of g.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h,
                                                    const IsoOptions& options = {});
bool is_isomorphic(const Graph& g, const Graph& h, const IsoOptions& options = {});

bool is_complete(const Graph& g);
// True iff `map` is a bijection carrying the edges of g onto those of h.
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map);

}  // namespace forestdyn
