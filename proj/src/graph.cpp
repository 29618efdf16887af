#include "forestdyn/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "forestdyn/error.hpp"

namespace forestdyn {

std::optional<EdgeIndex> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b || a >= n_ || b >= n_) return std::nullopt;
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

std::string Graph::name_of(Vertex v) const {
  if (v < names_.size()) return names_[v];
  return std::to_string(v);
}

Graph build_graph(std::size_t vertex_count,
                  std::span<const std::pair<std::size_t, std::size_t>> raw_edges,
                  std::vector<std::string> names) {
  if (!names.empty() && names.size() != vertex_count)
    throw InputError("vertex name count " + std::to_string(names.size()) +
                     " does not match vertex count " + std::to_string(vertex_count));
  Graph g;
  g.n_ = vertex_count;
  g.edges_.reserve(raw_edges.size());
  for (auto [a, b] : raw_edges) {
    if (a >= vertex_count || b >= vertex_count)
      throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") has an endpoint outside 0.." + std::to_string(vertex_count));
    if (a == b) throw InputError("loop at vertex " + std::to_string(a));
    g.edges_.push_back({static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.offsets_.assign(vertex_count + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adj_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeIndex i = 0; i < g.edges_.size(); ++i) {
    const Edge& e = g.edges_[i];
    g.adj_[fill[e.u]++] = {e.v, i};
    g.adj_[fill[e.v]++] = {e.u, i};
  }
  // Edge order already sorts each adjacency run by neighbour for the lower
  // endpoint; sort explicitly so every run is ordered.
  for (std::size_t v = 0; v < vertex_count; ++v)
    std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1],
              [](const Incidence& x, const Incidence& y) { return x.neighbor < y.neighbor; });
  g.names_ = std::move(names);
  return g;
}

Graph build_graph(std::size_t vertex_count,
                  std::initializer_list<std::pair<std::size_t, std::size_t>> raw_edges) {
  return build_graph(vertex_count,
                     std::span<const std::pair<std::size_t, std::size_t>>(raw_edges.begin(),
                                                                          raw_edges.size()));
}

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges,
                  std::vector<std::string> names) {
  std::vector<std::pair<std::size_t, std::size_t>> raw;
  raw.reserve(edges.size());
  for (const Edge& e : edges) raw.emplace_back(e.u, e.v);
  return build_graph(vertex_count, raw, std::move(names));
}

Graph with_names(const Graph& g, std::vector<std::string> names) {
  return build_graph(g.order(), g.edges(), std::move(names));
}

// ---------------------------------------------------------------------------

EdgeSubset EdgeSubset::from_indices(std::size_t universe, std::span<const EdgeIndex> members) {
  EdgeSubset s(universe);
  for (EdgeIndex e : members) {
    if (e >= universe)
      throw InputError("edge index " + std::to_string(e) + " outside 0.." +
                       std::to_string(universe));
    s.insert(e);
  }
  return s;
}

EdgeSubset EdgeSubset::full(std::size_t universe) {
  EdgeSubset s(universe);
  for (EdgeIndex e = 0; e < universe; ++e) s.insert(e);
  return s;
}

std::size_t EdgeSubset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<EdgeIndex> EdgeSubset::indices() const {
  std::vector<EdgeIndex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

EdgeIndex EdgeSubset::next(EdgeIndex from) const {
  if (from >= universe_) return universe_;
  std::size_t w = from >> 6;
  auto bits = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (bits) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return universe_;
    bits = words_[w];
  }
}

std::size_t difference_count(const EdgeSubset& a, const EdgeSubset& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.words_.size(); ++w)
    c += static_cast<std::size_t>(std::popcount(a.words_[w] & ~b.words_[w]));
  return c;
}

std::size_t symmetric_difference_count(const EdgeSubset& a, const EdgeSubset& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.words_.size(); ++w)
    c += static_cast<std::size_t>(std::popcount(a.words_[w] ^ b.words_[w]));
  return c;
}

EdgeSubset operator-(const EdgeSubset& a, const EdgeSubset& b) {
  EdgeSubset r = a;
  for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] &= ~b.words_[w];
  return r;
}

EdgeSubset operator|(const EdgeSubset& a, const EdgeSubset& b) {
  EdgeSubset r = a;
  for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] |= b.words_[w];
  return r;
}

EdgeSubset operator&(const EdgeSubset& a, const EdgeSubset& b) {
  EdgeSubset r = a;
  for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] &= b.words_[w];
  return r;
}

bool lex_less(const EdgeSubset& a, const EdgeSubset& b) {
  // Elements below the smallest member x of the symmetric difference are
  // shared. If x is in a, a is smaller unless b has nothing left (then b is
  // a proper prefix of a); symmetrically when x is in b.
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const auto diff = a.words_[w] ^ b.words_[w];
    if (!diff) continue;
    const EdgeIndex x = w * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    if (a.contains(x)) return b.next(x + 1) < b.universe_;
    return a.next(x + 1) >= a.universe_;
  }
  return false;
}

std::size_t EdgeSubset::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

Cycle cycle_through(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.size() < 3) throw InputError("a cycle needs at least 3 vertices");
  Cycle c;
  c.vertices.assign(vertices.begin(), vertices.end());
  std::vector<Vertex> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("cycle repeats a vertex");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex a = vertices[i];
    const Vertex b = vertices[(i + 1) % vertices.size()];
    auto e = g.edge_index(a, b);
    if (!e)
      throw InputError("no edge between " + std::to_string(a) + " and " + std::to_string(b));
    c.edges.push_back(*e);
  }
  return c;
}

bool is_cycle(const Graph& g, const Cycle& c) {
  if (c.length() < 3 || c.vertices.size() != c.edges.size()) return false;
  std::vector<Vertex> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < c.length(); ++i) {
    const Vertex a = c.vertices[i];
    const Vertex b = c.vertices[(i + 1) % c.length()];
    auto e = g.edge_index(a, b);
    if (!e || *e != c.edges[i]) return false;
  }
  return true;
}

EdgeSubset edge_set(const Graph& g, const Cycle& c) {
  return EdgeSubset::from_indices(g.size(), c.edges);
}

Graph edge_subgraph(const Graph& g, const EdgeSubset& s) {
  std::vector<Edge> kept;
  for (EdgeIndex e : s.indices()) kept.push_back(g.edge(e));
  return build_graph(g.order(), kept, g.vertex_names());
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle graphs need at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

Graph empty_graph(std::size_t n) { return build_graph(n, {}); }

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return build_graph(a + b, e);
}

Graph bowtie() { return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& x : b.edges()) e.push_back({x.u + shift, x.v + shift});
  return build_graph(a.order() + b.order(), e);
}

}  // namespace forestdyn
