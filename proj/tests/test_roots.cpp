#include <doctest.h>

#include "forestdyn/forest_graph.hpp"
#include "forestdyn/isomorphism.hpp"
#include "forestdyn/roots.hpp"
#include "forestdyn/structure.hpp"
#include "oracles.hpp"

using namespace forestdyn;

TEST_SUITE("roots") {
  TEST_CASE("pruning reasons") {
    const auto c4 = no_root_prune(cycle_graph(4));
    REQUIRE(c4.has_value());
    CHECK(c4->reason == NoRootReason::Bipartite);
    CHECK(c4->is_proof());
    CHECK(verify_no_root_certificate(cycle_graph(4), *c4));

    const Graph pendant = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    const auto p = no_root_prune(pendant);
    REQUIRE(p.has_value());
    CHECK(p->reason == NoRootReason::HasIsthmusOrIsolated);
    REQUIRE(p->isthmus.has_value());
    CHECK(bridges(pendant).contains(*p->isthmus));
    CHECK(verify_no_root_certificate(pendant, *p));

    const Graph split = disjoint_union(complete_graph(3), complete_graph(3));
    const auto d = no_root_prune(split);
    REQUIRE(d.has_value());
    CHECK(d->reason == NoRootReason::DisconnectedFinite);
    CHECK(d->parts.size() == 2);
    CHECK(verify_no_root_certificate(split, *d));

    CHECK_FALSE(no_root_prune(empty_graph(1)).has_value());
    CHECK_FALSE(no_root_prune(complete_graph(4)).has_value());
    CHECK(no_root_prune(complete_bipartite(3, 3))->reason == NoRootReason::Bipartite);
  }

  TEST_CASE("forged certificates are rejected") {
    NoRootCertificate fake;
    fake.reason = NoRootReason::Bipartite;
    fake.coloring = {0, 1, 0};
    CHECK_FALSE(verify_no_root_certificate(complete_graph(3), fake));
    NoRootCertificate isthmus;
    isthmus.reason = NoRootReason::HasIsthmusOrIsolated;
    isthmus.isthmus = 0;
    CHECK_FALSE(verify_no_root_certificate(cycle_graph(5), isthmus));
  }

  TEST_CASE("roots of K_4") {
    for (bool parallel : {true, false}) {
      RootSearchOptions opt;
      opt.parallel = parallel;
      const auto r = find_roots(complete_graph(4), opt);
      REQUIRE(r.roots.size() == 1);
      CHECK(is_isomorphic(r.roots[0].chain.front(), cycle_graph(4)));
      CHECK(verify_root_certificate(r.roots[0]));
      CHECK(r.candidates > 0);
    }
  }

  TEST_CASE("roots of K_3") {
    const auto r = find_roots(complete_graph(3));
    REQUIRE(r.roots.size() == 1);
    CHECK(is_isomorphic(r.roots[0].chain.front(), complete_graph(3)));
  }

  TEST_CASE("K_5 minus an edge has no root") {
    Graph g = complete_graph(5);
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (const auto& e : g.edges())
      if (!(e.u == 0 && e.v == 1)) es.emplace_back(e.u, e.v);
    g = build_graph(5, es);
    const auto r = find_roots(g);
    CHECK(r.roots.empty());
    REQUIRE(r.none.has_value());
  }

  TEST_CASE("root soundness is rechecked") {
    const auto r = find_roots(complete_graph(4));
    for (const auto& c : r.roots) {
      const auto f = oracle::forest_graph(oracle::from(c.chain.front()));
      CHECK(oracle::isomorphic(f, oracle::from(complete_graph(4))));
    }
    RootCertificate bad;
    bad.chain = {cycle_graph(5), complete_graph(4)};
    bad.iso_maps = {{0, 1, 2, 3, 4}};
    CHECK_FALSE(verify_root_certificate(bad));
  }

  TEST_CASE("depth") {
    const auto k4 = depth_lower_bound(complete_graph(4));
    CHECK(k4.depth == 1);
    CHECK(k4.chain_stops_by_proof);
    REQUIRE(k4.stop.has_value());
    CHECK(k4.stop->reason == NoRootReason::Bipartite);
    REQUIRE(k4.chain.has_value());
    CHECK(k4.chain->chain.size() == 2);

    const auto k3 = depth_lower_bound(complete_graph(3));
    CHECK(k3.stability_detected);

    const auto c4 = depth_lower_bound(cycle_graph(4));
    CHECK(c4.depth == 0);
    CHECK(c4.chain_stops_by_proof);
  }
}
