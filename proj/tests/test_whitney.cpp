#include <doctest.h>

#include "forestdyn/corpus.hpp"
#include "forestdyn/error.hpp"
#include "forestdyn/forests.hpp"
#include "forestdyn/isomorphism.hpp"
#include "forestdyn/structure.hpp"
#include "forestdyn/whitney.hpp"
#include "oracles.hpp"

using namespace forestdyn;

namespace {

// Forest families compared through the oracle, with edges renamed by edge_map.
bool oracle_same_family(const Graph& before, const WhitneyResult& r) {
  auto a = oracle::maximal_forests(oracle::from(before));
  auto b = oracle::maximal_forests(oracle::from(r.graph));
  for (auto& f : a) {
    for (auto& e : f) e = static_cast<int>(r.edge_map[e]);
    std::sort(f.begin(), f.end());
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST_SUITE("whitney") {
  TEST_CASE("identify two triangles into a bowtie") {
    const Graph two = disjoint_union(complete_graph(3), complete_graph(3));
    const std::vector<std::pair<Vertex, Vertex>> pairs{{2, 3}};
    const auto r = whitney_identify(two, pairs);
    CHECK(is_isomorphic(r.graph, bowtie()));
    CHECK(oracle_same_family(two, r));
    CHECK(same_forest_family(two, r.graph, r.edge_map));
    const std::vector<std::pair<Vertex, Vertex>> same{{0, 1}};
    CHECK_THROWS_AS(whitney_identify(two, same), InputError);
  }

  TEST_CASE("identify K_1 with K_3") {
    const Graph g = disjoint_union(empty_graph(1), complete_graph(3));
    const std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}};
    const auto r = whitney_identify(g, pairs);
    CHECK(is_isomorphic(r.graph, complete_graph(3)));
  }

  TEST_CASE("chaining three components") {
    const Graph g = disjoint_union(disjoint_union(complete_graph(3), cycle_graph(4)), complete_graph(3));
    const std::vector<std::pair<Vertex, Vertex>> pairs{{0, 3}, {5, 7}};
    const auto r = whitney_identify(g, pairs);
    CHECK(is_connected(r.graph));
    CHECK(oracle_same_family(g, r));
  }

  TEST_CASE("split is the inverse of identify") {
    const Graph b = bowtie();
    Vertex centre = 0;
    for (Vertex v = 0; v < b.order(); ++v)
      if (b.degree(v) == 4) centre = v;
    const auto parts = components_avoiding(b, std::vector<Vertex>{centre});
    const auto r = whitney_split(b, centre, parts[0]);
    CHECK(is_isomorphic(r.graph, disjoint_union(complete_graph(3), complete_graph(3))));
    CHECK(oracle_same_family(b, r));
    const std::vector<std::pair<Vertex, Vertex>> back{{centre, static_cast<Vertex>(b.order())}};
    CHECK(is_isomorphic(whitney_identify(r.graph, back).graph, b));
    CHECK_THROWS_AS(whitney_split(cycle_graph(4), 0, std::vector<Vertex>{1}), InputError);
  }

  TEST_CASE("split a triangle with a pendant path") {
    const Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    const auto r = whitney_split(g, 2, std::vector<Vertex>{3, 4});
    CHECK(component_count(r.graph) == 2);
    CHECK(oracle_same_family(g, r));
  }

  TEST_CASE("twist the diamond") {
    const Graph d = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    const auto r = whitney_twist(d, 0, 1, std::vector<Vertex>{0, 1, 3});
    CHECK(is_isomorphic(r.graph, d));
    CHECK(oracle_same_family(d, r));
  }

  TEST_CASE("twist C_6 at antipodes") {
    const Graph c = cycle_graph(6);
    const auto r = whitney_twist(c, 0, 3, std::vector<Vertex>{0, 1, 2, 3});
    CHECK(is_isomorphic(r.graph, c));
    CHECK(oracle_same_family(c, r));
    CHECK_THROWS_AS(whitney_twist(c, 0, 2, std::vector<Vertex>{0, 2, 4}), InputError);
  }

  TEST_CASE("asymmetric twist relabels") {
    // u = 0, v = 1; a 2-path through 2 and a 3-path through 3, 4 with a triangle on 3.
    const Graph g = build_graph(6, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {3, 5}, {4, 5}});
    const auto r = whitney_twist(g, 0, 1, std::vector<Vertex>{0, 1, 3, 4, 5});
    CHECK(oracle::from(r.graph).edges != oracle::from(g).edges);
    CHECK(oracle_same_family(g, r));
    CHECK(same_forest_family(g, r.graph, r.edge_map));
  }

  TEST_CASE("every enumerated move preserves the family") {
    std::size_t moves = 0;
    for (const auto& g : graphs_up_to(5)) {
      for (const auto& m : applicable_whitney_moves(g)) {
        const auto r = apply_whitney(g, m);
        CHECK(oracle_same_family(g, r));
        ++moves;
      }
    }
    CHECK(moves > 100);
  }
}
