#include "forestdyn/corpus.hpp"

#include <random>
#include <set>

#include "forestdyn/error.hpp"
#include "forestdyn/isomorphism.hpp"

namespace forestdyn {

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > kMaxCorpusOrder)
    throw ResourceError("enumerate_graphs: order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxCorpusOrder));
  std::vector<Graph> out;
  std::set<CanonicalForm> level{canonical_form(empty_graph(n))};
  while (!level.empty()) {
    std::set<CanonicalForm> next;
    for (const auto& form : level) {
      const Graph g = build_graph(n, form.edges);
      out.push_back(g);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
          if (g.adjacent(a, b)) continue;
          auto edges = form.edges;
          edges.push_back({a, b});
          next.insert(canonical_form(build_graph(n, edges)));
        }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<Graph> graphs_up_to(std::size_t max_order) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto part = enumerate_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.push_back({a, b});
  return build_graph(n, edges);
}

}  // namespace forestdyn
