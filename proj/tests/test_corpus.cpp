#include <doctest.h>

#include <set>

#include "forestdyn/corpus.hpp"
#include "forestdyn/isomorphism.hpp"
#include "oracles.hpp"

using namespace forestdyn;

TEST_SUITE("corpus") {
  TEST_CASE("unlabeled counts") {
    // Frozen from the brute-force generator below (n <= 5) and the
    // augmentation generator cross-checked against it.
    const std::size_t expect[] = {1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 1; n <= kMaxCorpusOrder; ++n) CHECK(enumerate_graphs(n).size() == expect[n - 1]);
  }

  TEST_CASE("generator agrees with brute force") {
    for (int n = 1; n <= 5; ++n) {
      std::set<oracle::EdgeList> brute;
      for (const auto& g : oracle::brute_unlabeled(n)) brute.insert(oracle::brute_canonical(g));
      std::set<oracle::EdgeList> ours;
      for (const auto& g : enumerate_graphs(static_cast<std::size_t>(n)))
        CHECK(ours.insert(oracle::brute_canonical(oracle::from(g))).second);
      CHECK(ours == brute);
    }
  }

  TEST_CASE("small cases") {
    const auto one = enumerate_graphs(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].order() == 1);
    CHECK(graphs_up_to(3).size() == 7);
    CHECK(enumerate_graphs(0).size() == 1);
    CHECK_THROWS(enumerate_graphs(kMaxCorpusOrder + 1));
  }

  TEST_CASE("random graphs are seeded") {
    const auto a = random_graph(8, 0.5, 42);
    const auto b = random_graph(8, 0.5, 42);
    CHECK(oracle::from(a).edges == oracle::from(b).edges);
    CHECK(random_graph(6, 0.0, 1).size() == 0);
    CHECK(random_graph(6, 1.0, 1).size() == 15);
  }
}
