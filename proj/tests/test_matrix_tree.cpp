#include <doctest.h>

#include <random>

#include "forestdyn/corpus.hpp"
#include "forestdyn/matrix_tree.hpp"
#include "forestdyn/structure.hpp"
#include "oracles.hpp"

using namespace forestdyn;

TEST_SUITE("matrix_tree") {
  TEST_CASE("Cayley's formula") {
    for (std::size_t n = 1; n <= 12; ++n) {
      BigInt expect = 1;
      for (std::size_t i = 0; i + 2 < n; ++i) expect *= n;
      CHECK(count_maximal_forests(complete_graph(n)) == expect);
    }
  }

  TEST_CASE("known values") {
    CHECK(count_maximal_forests(cycle_graph(9)) == 9);
    CHECK(count_maximal_forests(complete_bipartite(3, 3)) == 81);
    CHECK(count_maximal_forests(bowtie()) == 9);
    CHECK(count_maximal_forests(empty_graph(4)) == 1);
    CHECK(count_maximal_forests(Graph{}) == 1);
    // Frozen from an independent deletion-contraction run.
    CHECK(count_maximal_forests(cartesian_product(complete_graph(3), complete_graph(3))) == 11664);
  }

  TEST_CASE("deletion-contraction oracle on the corpus") {
    for (const auto& g : graphs_up_to(5)) {
      const auto s = oracle::from(g);
      CHECK(count_maximal_forests(g) == oracle::forest_count(s.n, s.edges));
    }
  }

  TEST_CASE("Bareiss and multi-modular agree") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (std::size_t n : {1, 2, 5, 13, 30}) {
      IntMatrix m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
      CHECK(determinant_bareiss(m) == determinant_multimodular(m));
    }
    IntMatrix singular(3);
    for (std::size_t j = 0; j < 3; ++j) singular(0, j) = singular(1, j) = static_cast<std::int64_t>(j + 1);
    singular(2, 2) = 4;
    CHECK(determinant_bareiss(singular) == 0);
    CHECK(determinant_multimodular(singular) == 0);
  }

  TEST_CASE("large Laplacians use the modular route") {
    const Graph g = cartesian_product(cycle_graph(6), cycle_graph(6));
    const auto all = components(g);
    const auto lap = reduced_laplacian(g, all[0]);
    CHECK(determinant_multimodular(lap) == determinant_bareiss(lap));
    CHECK(count_maximal_forests(complete_graph(30)) == boost::multiprecision::pow(BigInt(30), 28));
  }

  TEST_CASE("lower bound never exceeds the count") {
    for (const auto& g : graphs_up_to(6)) CHECK(forest_count_lower_bound(g) <= count_maximal_forests(g));
    CHECK(forest_count_lower_bound(complete_graph(8)) > 1000);
  }
}
