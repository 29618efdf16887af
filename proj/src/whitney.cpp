#include "forestdyn/whitney.hpp"

#include <algorithm>
#include <numeric>

#include "forestdyn/error.hpp"
#include "forestdyn/structure.hpp"
#include "forestdyn/union_find.hpp"

namespace forestdyn {

namespace {

WhitneyResult rebuild(const Graph& g, std::size_t order, const std::vector<Vertex>& vertex_map,
                      const std::vector<Edge>& mapped) {
  WhitneyResult r;
  r.graph = build_graph(order, mapped);
  if (r.graph.size() != g.size()) throw InputError("whitney: operation would merge parallel edges");
  r.vertex_map = vertex_map;
  r.edge_map.reserve(mapped.size());
  for (const auto& e : mapped) r.edge_map.push_back(*r.graph.edge_index(e.u, e.v));
  return r;
}

std::vector<char> membership(const Graph& g, std::span<const Vertex> side, const char* op) {
  std::vector<char> in(g.order(), 0);
  for (Vertex x : side) {
    if (x >= g.order()) throw InputError(std::string(op) + ": vertex out of range");
    in[x] = 1;
  }
  return in;
}

}  // namespace

WhitneyResult whitney_identify(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs) {
  const std::size_t n = g.order();
  UnionFind comp(n);
  for (const auto& e : g.edges()) comp.unite(e.u, e.v);
  UnionFind merged(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw InputError("whitney_identify: vertex out of range");
    if (comp.find(a) == comp.find(b))
      throw InputError("whitney_identify: " + std::to_string(a) + " and " + std::to_string(b) +
                       " are in the same component");
    comp.unite(a, b);
    merged.unite(a, b);
  }
  // New numbering by smallest member of each merged class.
  std::vector<Vertex> label(n, 0), first(n, static_cast<Vertex>(n));
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto root = merged.find(v);
    if (first[root] == n) first[root] = next++;
    label[v] = first[root];
  }
  std::vector<Edge> mapped;
  for (const auto& e : g.edges()) mapped.push_back({label[e.u], label[e.v]});
  return rebuild(g, next, label, mapped);
}

WhitneyResult whitney_split(const Graph& g, Vertex v, std::span<const Vertex> side) {
  const std::size_t n = g.order();
  if (v >= n) throw InputError("whitney_split: vertex out of range");
  const auto in = membership(g, side, "whitney_split");
  if (in[v]) throw InputError("whitney_split: side must not contain the split vertex");

  const Vertex removed[] = {v};
  std::size_t attached = 0, moved = 0;
  for (const auto& part : components_avoiding(g, removed)) {
    const bool touches = std::any_of(part.begin(), part.end(), [&](Vertex x) { return g.adjacent(v, x); });
    const std::size_t inside = static_cast<std::size_t>(std::count_if(part.begin(), part.end(), [&](Vertex x) { return in[x] != 0; }));
    if (inside != 0 && inside != part.size())
      throw InputError("whitney_split: side cuts through a component of g - v");
    if (touches) {
      ++attached;
      if (inside) ++moved;
    } else if (inside) {
      throw InputError("whitney_split: side contains a component not attached to v");
    }
  }
  if (attached < 2) throw InputError("whitney_split: vertex " + std::to_string(v) + " is not a cut vertex");
  if (moved == 0 || moved == attached)
    throw InputError("whitney_split: side must take some but not all pieces at v");

  const auto copy = static_cast<Vertex>(n);
  std::vector<Edge> mapped;
  for (const auto& e : g.edges()) {
    if (e.has(v) && in[e.other(v)])
      mapped.push_back({std::min(copy, e.other(v)), std::max(copy, e.other(v))});
    else
      mapped.push_back(e);
  }
  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  return rebuild(g, n + 1, identity, mapped);
}

WhitneyResult whitney_twist(const Graph& g, Vertex u, Vertex v, std::span<const Vertex> side) {
  const std::size_t n = g.order();
  if (u >= n || v >= n || u == v) throw InputError("whitney_twist: need two distinct vertices");
  const auto in = membership(g, side, "whitney_twist");
  if (!in[u] || !in[v]) throw InputError("whitney_twist: side must contain both separating vertices");
  std::size_t inner = 0;
  for (Vertex x = 0; x < n; ++x) inner += in[x] && x != u && x != v;
  if (inner == 0 || std::count(in.begin(), in.end(), 0) == 0)
    throw InputError("whitney_twist: both sides need a vertex besides u and v");

  const auto interior = [&](Vertex x) { return in[x] && x != u && x != v; };
  const auto swap_uv = [&](Vertex x) { return x == u ? v : x == v ? u : x; };
  std::vector<Edge> mapped;
  for (const auto& e : g.edges()) {
    const bool a = interior(e.u), b = interior(e.v);
    if ((a && !in[e.v]) || (b && !in[e.u]))
      throw InputError("whitney_twist: {" + std::to_string(u) + ", " + std::to_string(v) +
                       "} does not separate the two sides");
    if (a || b) {
      const Vertex x = swap_uv(e.u), y = swap_uv(e.v);
      mapped.push_back({std::min(x, y), std::max(x, y)});
    } else {
      mapped.push_back(e);
    }
  }
  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  return rebuild(g, n, identity, mapped);
}

namespace {

// Unions of the chosen pieces for every proper nonempty subset (pieces capped
// at 10 to keep the count bounded).
std::vector<std::vector<Vertex>> proper_unions(const std::vector<std::vector<Vertex>>& pieces) {
  std::vector<std::vector<Vertex>> out;
  const std::size_t k = std::min<std::size_t>(pieces.size(), 10);
  if (k < 2) return out;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
    std::vector<Vertex> side;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) side.insert(side.end(), pieces[i].begin(), pieces[i].end());
    std::sort(side.begin(), side.end());
    out.push_back(std::move(side));
  }
  return out;
}

}  // namespace

std::vector<WhitneyMove> applicable_whitney_moves(const Graph& g) {
  std::vector<WhitneyMove> moves;
  const auto comps = components(g);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      for (Vertex a : comps[i])
        for (Vertex b : comps[j]) moves.push_back({WhitneyKind::Identify, {{a, b}}, 0, 0, {}});

  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex removed[] = {v};
    std::vector<std::vector<Vertex>> attached;
    for (auto& part : components_avoiding(g, removed))
      if (std::any_of(part.begin(), part.end(), [&](Vertex x) { return g.adjacent(v, x); }))
        attached.push_back(std::move(part));
    for (auto& side : proper_unions(attached)) moves.push_back({WhitneyKind::Split, {}, v, 0, std::move(side)});
  }

  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const Vertex removed[] = {u, v};
      for (auto& side : proper_unions(components_avoiding(g, removed))) {
        side.push_back(u);
        side.push_back(v);
        std::sort(side.begin(), side.end());
        moves.push_back({WhitneyKind::Twist, {}, u, v, std::move(side)});
      }
    }
  return moves;
}

WhitneyResult apply_whitney(const Graph& g, const WhitneyMove& move) {
  switch (move.kind) {
    case WhitneyKind::Identify: return whitney_identify(g, move.pairs);
    case WhitneyKind::Split: return whitney_split(g, move.u, move.side);
    case WhitneyKind::Twist: return whitney_twist(g, move.u, move.v, move.side);
  }
  throw InputError("apply_whitney: unknown operation");
}

bool same_forest_family(const Graph& before, const Graph& after,
                        const std::vector<EdgeIndex>& edge_map, std::uint64_t budget) {
  if (edge_map.size() != before.size() || before.size() != after.size()) return false;
  const auto a = maximal_forests(before, budget);
  const auto b = maximal_forests(after, budget);
  if (a.size() != b.size()) return false;
  std::vector<EdgeSubset> pushed;
  pushed.reserve(a.size());
  for (const auto& f : a.members) {
    EdgeSubset s(after.size());
    for (EdgeIndex e : f.indices()) s.insert(edge_map[e]);
    pushed.push_back(std::move(s));
  }
  std::sort(pushed.begin(), pushed.end(), lex_less);
  return pushed == b.members;
}

}  // namespace forestdyn
