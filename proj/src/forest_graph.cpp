#include "forestdyn/forest_graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "forestdyn/error.hpp"
#include "forestdyn/parallel.hpp"
#include "forestdyn/structure.hpp"

namespace forestdyn {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Key {
  std::uint64_t hash;
  std::uint32_t forest;

  auto operator<=>(const Key&) const = default;
};

}  // namespace

std::vector<VertexPair> forest_adjacency(const ForestFamily& family) {
  const std::size_t count = family.size();
  if (count < 2) return {};
  const std::size_t m = family.base.size();
  std::vector<std::uint64_t> zobrist(m);
  for (std::size_t e = 0; e < m; ++e) zobrist[e] = splitmix64(0x5eed0000ULL + e);

  // Every maximal forest of a fixed graph has the same number of edges.
  const std::size_t rank = family.members[0].count();
  std::vector<Key> keys(count * rank);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(count); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto members = family.members[i].indices();
    std::uint64_t whole = 0;
    for (EdgeIndex e : members) whole ^= zobrist[e];
    for (std::size_t t = 0; t < members.size(); ++t)
      keys[i * rank + t] = {whole ^ zobrist[members[t]], static_cast<std::uint32_t>(i)};
  }
  std::sort(keys.begin(), keys.end());

  // Group boundaries, then verify candidate pairs exactly.
  std::vector<std::size_t> starts;
  for (std::size_t k = 0; k < keys.size(); ++k)
    if (k == 0 || keys[k].hash != keys[k - 1].hash) starts.push_back(k);
  starts.push_back(keys.size());

  std::vector<std::vector<VertexPair>> local(static_cast<std::size_t>(num_threads()));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t gi = 0; gi < static_cast<std::ptrdiff_t>(starts.size()) - 1; ++gi) {
    auto& out = local[static_cast<std::size_t>(thread_num())];
    const std::size_t lo = starts[static_cast<std::size_t>(gi)];
    const std::size_t hi = starts[static_cast<std::size_t>(gi) + 1];
    for (std::size_t a = lo; a < hi; ++a)
      for (std::size_t b = a + 1; b < hi; ++b) {
        const auto fa = keys[a].forest, fb = keys[b].forest;
        if (fa == fb) continue;
        if (symmetric_difference_count(family.members[fa], family.members[fb]) == 2)
          out.emplace_back(std::min(fa, fb), std::max(fa, fb));
      }
  }
  std::vector<VertexPair> pairs;
  for (auto& part : local) pairs.insert(pairs.end(), part.begin(), part.end());
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<VertexPair> forest_adjacency_pairwise(const ForestFamily& family) {
  std::vector<VertexPair> pairs;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (symmetric_difference_count(family.members[i], family.members[j]) == 2)
        pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return pairs;
}

ForestGraph forest_graph_of(ForestFamily family) {
  const auto pairs = forest_adjacency(family);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({a, b});
  Graph g = build_graph(family.size(), edges);
  return ForestGraph{std::move(family), std::move(g)};
}

ForestGraph build_forest_graph(const Graph& g, std::uint64_t budget) {
  return forest_graph_of(maximal_forests(g, budget));
}

std::size_t forest_distance(const MaximalForest& f1, const MaximalForest& f2) {
  if (f1.base_fingerprint() != f2.base_fingerprint())
    throw InputError("forest_distance: forests belong to different graphs");
  return difference_count(f1.edges(), f2.edges());
}

std::vector<MaximalForest> exchange_path(const Graph& g, const MaximalForest& f1,
                                         const MaximalForest& f2) {
  const auto fp = fingerprint(g);
  if (f1.base_fingerprint() != fp || f2.base_fingerprint() != fp)
    throw InputError("exchange_path: forests do not belong to this graph");

  // Walk from f2 towards f1, then reverse.
  std::vector<EdgeSubset> walk{f2.edges()};
  EdgeSubset current = f2.edges();
  const EdgeSubset& target = f1.edges();
  std::vector<int> side(g.order());
  std::vector<Vertex> stack;
  while (current != target) {
    const EdgeIndex drop = (current - target).next(0);
    current.erase(drop);
    // Label the two trees left by the deletion: 1 holds u, 2 holds v.
    std::fill(side.begin(), side.end(), 0);
    const Edge& de = g.edge(drop);
    for (int label : {1, 2}) {
      const Vertex s = label == 1 ? de.u : de.v;
      side[s] = label;
      stack.assign(1, s);
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incident(x))
          if (current.contains(inc.edge) && side[inc.neighbor] == 0) {
            side[inc.neighbor] = label;
            stack.push_back(inc.neighbor);
          }
      }
    }
    const EdgeSubset candidates = target - current;
    EdgeIndex add = g.size();
    for (EdgeIndex e = candidates.next(0); e < g.size(); e = candidates.next(e + 1)) {
      const Edge& ce = g.edge(e);
      if (side[ce.u] && side[ce.v] && side[ce.u] != side[ce.v]) {
        add = e;
        break;
      }
    }
    if (add == g.size()) throw InputError("exchange_path: no reconnecting edge (not maximal forests)");
    current.insert(add);
    walk.push_back(current);
  }
  std::vector<MaximalForest> path;
  path.reserve(walk.size());
  for (auto it = walk.rbegin(); it != walk.rend(); ++it) path.emplace_back(g, *it);
  return path;
}

ConnectivityReport connectivity_report(const Graph& h) {
  ConnectivityReport r;
  r.vertices = h.order();
  r.edges = h.size();
  r.connected = is_connected(h);
  if (!r.connected || h.order() == 0) return r;
  std::size_t diameter = 0;
#pragma omp parallel for schedule(dynamic) reduction(max : diameter)
  for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(h.order()); ++s) {
    const auto dist = bfs_distances(h, static_cast<Vertex>(s));
    for (auto d : dist) diameter = std::max(diameter, d);
  }
  r.diameter = diameter;
  return r;
}

ConnectivityReport finite_connectivity_check(const Graph& g, std::uint64_t budget) {
  return connectivity_report(build_forest_graph(g, budget).graph);
}

}  // namespace forestdyn
