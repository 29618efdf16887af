#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace forestdyn {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;

// Normalized undirected edge, u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
  bool has(Vertex w) const noexcept { return w == u || w == v; }
  auto operator<=>(const Edge&) const = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeIndex edge;
};

// Labeled simple undirected graph. Vertices are 0..order()-1; the edge table
// is strictly sorted by (min, max) endpoint pair, and every edge-indexed
// structure in the library keys off that order. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }

  std::span<const Incidence> incident(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeIndex> edge_index(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  // External labels; empty when the graph was built without names.
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  std::string name_of(Vertex v) const;

  // Labeled equality: same order and identical edge table. Names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(std::size_t, std::span<const std::pair<std::size_t, std::size_t>>,
                           std::vector<std::string>);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adj_;
  std::vector<std::string> names_;
};

// Normalizes, sorts and deduplicates. Throws InputError on an out-of-range
// endpoint or a loop, or when `names` is non-empty with the wrong length.
Graph build_graph(std::size_t vertex_count,
                  std::span<const std::pair<std::size_t, std::size_t>> raw_edges,
                  std::vector<std::string> names = {});

Graph build_graph(std::size_t vertex_count,
                  std::initializer_list<std::pair<std::size_t, std::size_t>> raw_edges);

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges,
                  std::vector<std::string> names = {});

// Same vertices and edges, names replaced.
Graph with_names(const Graph& g, std::vector<std::string> names);

// Dense bit vector over a host graph's edge indices.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static EdgeSubset from_indices(std::size_t universe, std::span<const EdgeIndex> members);
  static EdgeSubset full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(EdgeIndex e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void insert(EdgeIndex e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(EdgeIndex e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  std::vector<EdgeIndex> indices() const;
  // Lowest member not below `from`, or universe() when none.
  EdgeIndex next(EdgeIndex from) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  // |a \ b|
  friend std::size_t difference_count(const EdgeSubset& a, const EdgeSubset& b);
  friend std::size_t symmetric_difference_count(const EdgeSubset& a, const EdgeSubset& b);
  friend EdgeSubset operator-(const EdgeSubset& a, const EdgeSubset& b);
  friend EdgeSubset operator|(const EdgeSubset& a, const EdgeSubset& b);
  friend EdgeSubset operator&(const EdgeSubset& a, const EdgeSubset& b);

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
  // Lexicographic on the sorted member lists.
  friend bool lex_less(const EdgeSubset& a, const EdgeSubset& b);

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

bool lex_less(const EdgeSubset& a, const EdgeSubset& b);

struct EdgeSubsetHash {
  std::size_t operator()(const EdgeSubset& s) const noexcept { return s.hash(); }
};

// Closed walk without repeated vertices. edges[i] joins vertices[i] and
// vertices[(i + 1) % length()].
struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;

  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Builds the cycle through `vertices` in order; throws InputError if some
// consecutive pair is not an edge or a vertex repeats.
Cycle cycle_through(const Graph& g, std::span<const Vertex> vertices);
// True iff `c` is a well-formed cycle of `g` (length >= 3).
bool is_cycle(const Graph& g, const Cycle& c);

EdgeSubset edge_set(const Graph& g, const Cycle& c);
// Subgraph with the same vertex set and only the edges in `s`.
Graph edge_subgraph(const Graph& g, const EdgeSubset& s);

// Standard families. Vertex numbering: K_n, C_n and P_n in order around;
// the bowtie has centre 0 with triangles {0,1,2} and {0,3,4}.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph bowtie();
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace forestdyn
