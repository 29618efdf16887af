#include <doctest.h>

#include "forestdyn/corpus.hpp"
#include "forestdyn/error.hpp"
#include "forestdyn/forest_graph.hpp"
#include "forestdyn/isomorphism.hpp"
#include "forestdyn/matrix_tree.hpp"
#include "forestdyn/structure.hpp"
#include "oracles.hpp"

using namespace forestdyn;

TEST_SUITE("forest_graph") {
  TEST_CASE("bucketed adjacency equals the pairwise reference") {
    for (const auto& g : graphs_up_to(6)) {
      if (count_maximal_forests(g) > 1300) continue;
      const auto fam = maximal_forests(g);
      CHECK(forest_adjacency(fam) == forest_adjacency_pairwise(fam));
    }
  }

  TEST_CASE("F(G) equals the oracle construction") {
    for (const auto& g : graphs_up_to(5)) {
      const auto f = oracle::from(build_forest_graph(g).graph);
      const auto o = oracle::forest_graph(oracle::from(g));
      CHECK(f.n == o.n);
      CHECK(f.edges == o.edges);
    }
  }

  TEST_CASE("small forest graphs") {
    CHECK(is_isomorphic(build_forest_graph(cycle_graph(5)).graph, complete_graph(5)));
    CHECK(build_forest_graph(path_graph(5)).graph.order() == 1);
    const auto k4 = build_forest_graph(complete_graph(4)).graph;
    CHECK(k4.order() == 16);
    CHECK(k4.size() == 54);
  }

  TEST_CASE("distance and exchange paths") {
    const Graph g = complete_graph(4);
    const auto fam = maximal_forests(g);
    const auto e = [&](Vertex a, Vertex b) { return *g.edge_index(a, b); };
    EdgeSubset star(g.size()), path(g.size());
    for (auto x : {e(0, 1), e(0, 2), e(0, 3)}) star.insert(x);
    for (auto x : {e(0, 1), e(1, 2), e(2, 3)}) path.insert(x);
    const MaximalForest a(g, star), b(g, path);
    CHECK(forest_distance(a, b) == 2);
    const auto walk = exchange_path(g, a, b);
    REQUIRE(walk.size() == 3);
    CHECK(walk.front() == a);
    CHECK(walk.back() == b);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
      CHECK(symmetric_difference_count(walk[i].edges(), walk[i + 1].edges()) == 2);
    const MaximalForest other(cycle_graph(4), EdgeSubset::from_indices(4, std::vector<EdgeIndex>{0, 1, 2}));
    CHECK_THROWS_AS(forest_distance(a, other), InputError);
  }

  TEST_CASE("connectivity report") {
    const auto r = finite_connectivity_check(complete_graph(4));
    CHECK(r.connected);
    CHECK(r.vertices == 16);
    CHECK(r.diameter == 3);  // two edge-disjoint spanning trees exist
    CHECK(finite_connectivity_check(bowtie()).diameter == 2);
    CHECK(finite_connectivity_check(cycle_graph(6)).diameter == 1);
  }

  TEST_CASE("budget") { CHECK_THROWS_AS(build_forest_graph(complete_graph(7), 100), ResourceError); }
}
