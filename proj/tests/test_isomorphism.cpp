#include <doctest.h>

#include <algorithm>
#include <random>

#include "forestdyn/error.hpp"
#include "forestdyn/isomorphism.hpp"
#include "forestdyn/structure.hpp"
#include "oracles.hpp"

using namespace forestdyn;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])});
  return build_graph(g.order(), edges);
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.push_back({a, b});
  return build_graph(n, edges);
}

}  // namespace

TEST_SUITE("isomorphism") {
  TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 60; ++round) {
      const std::size_t n = 3 + round % 8;
      const Graph g = random_graph(n, 0.45, rng);
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph h = relabel(g, perm);
      CHECK(canonical_form(g) == canonical_form(h));
      const auto map = find_isomorphism(g, h);
      REQUIRE(map.has_value());
      CHECK(is_isomorphism(g, h, *map));
    }
  }

  TEST_CASE("agrees with the backtracking oracle") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
      const std::size_t n = 4 + round % 4;
      const Graph a = random_graph(n, 0.5, rng);
      const Graph b = random_graph(n, 0.5, rng);
      CHECK(is_isomorphic(a, b) == oracle::isomorphic(oracle::from(a), oracle::from(b)));
    }
  }

  TEST_CASE("regular graphs that refinement cannot split") {
    // C_6 versus two triangles; the Petersen graph versus a relabeled copy.
    CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
    const Graph petersen = build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                            {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    std::vector<Vertex> perm{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
    CHECK(is_isomorphic(petersen, relabel(petersen, perm)));
    CHECK_FALSE(is_isomorphic(petersen, cartesian_product(cycle_graph(5), path_graph(2))));
  }

  TEST_CASE("complete and edgeless graphs at any order") {
    CHECK(is_isomorphic(complete_graph(40), complete_graph(40)));
    CHECK(is_complete(complete_graph(30)));
    CHECK(canonical_form(empty_graph(50)).edges.empty());
    CHECK_FALSE(is_isomorphic(complete_graph(5), cycle_graph(5)));
  }

  TEST_CASE("generic path refuses large inputs") {
    IsoOptions small;
    small.max_vertices = 6;
    CHECK_THROWS_AS(canonical_form(cycle_graph(9), small), ResourceError);
  }
}
