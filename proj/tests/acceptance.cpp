// One line per acceptance criterion. Library results are checked against the
// brute-force routines in oracles.hpp wherever that is feasible.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "forestdyn/corpus.hpp"
#include "forestdyn/dynamics.hpp"
#include "forestdyn/forest_graph.hpp"
#include "forestdyn/isomorphism.hpp"
#include "forestdyn/matrix_tree.hpp"
#include "forestdyn/roots.hpp"
#include "forestdyn/structure.hpp"
#include "forestdyn/whitney.hpp"
#include "oracles.hpp"

using namespace forestdyn;

namespace {

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

std::vector<int> ints(const EdgeSubset& s) {
  const auto idx = s.indices();
  return {idx.begin(), idx.end()};
}

oracle::Int to_oracle(const BigInt& x) { return oracle::Int(to_string(x)); }

// Witness checked from scratch: members are maximal forests of the host and
// pairwise one exchange apart.
bool oracle_clique(const oracle::Simple& host, const std::vector<EdgeSubset>& forests) {
  std::vector<std::vector<int>> fs;
  for (const auto& f : forests) {
    fs.push_back(ints(f));
    if (!oracle::is_maximal_forest(host, fs.back())) return false;
  }
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (oracle::symmetric_difference(fs[i], fs[j]) != 2) return false;
  return true;
}

oracle::Simple rook_torus() {
  oracle::Simple s{9, {}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const int v = 3 * r + c;
      for (int w : {3 * r + (c + 1) % 3, 3 * ((r + 1) % 3) + c}) s.edges.emplace_back(std::min(v, w), std::max(v, w));
    }
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

std::string c1() {
  for (int n = 3; n <= 7; ++n) {
    const Graph f = build_forest_graph(cycle_graph(static_cast<std::size_t>(n))).graph;
    expect(is_isomorphic(f, complete_graph(static_cast<std::size_t>(n))), "F(C_" + std::to_string(n) + ") not K_n");
    const auto o = oracle::from(f);
    expect(o.edges == oracle::forest_graph(oracle::cycle(n)).edges, "F(C_n) differs from oracle");
    expect(oracle::isomorphic(o, oracle::complete(n)), "oracle: F(C_n) not K_n");
  }
  return "n = 3..7";
}

std::string c2() {
  for (int n = 2; n <= 8; ++n) {
    oracle::Int expect_count = 1;
    for (int i = 0; i + 2 < n; ++i) expect_count *= n;
    const BigInt got = count_maximal_forests(complete_graph(static_cast<std::size_t>(n)));
    expect(to_oracle(got) == expect_count, "K_" + std::to_string(n) + " count " + to_string(got));
    if (n <= 6) expect(maximal_forests(complete_graph(static_cast<std::size_t>(n))).size() == got, "enumeration size");
  }
  expect(maximal_forests(complete_graph(6)).size() == 1296, "K_6 enumeration");
  return "n = 2..8; K_6 -> 1296";
}

std::string c3() {
  std::size_t graphs = 0, pairs = 0;
  for (const auto& g : graphs_up_to(6)) {
    if (count_maximal_forests(g) > 500) continue;
    const ForestGraph fg = build_forest_graph(g);
    const auto og = oracle::forest_graph(oracle::from(g));
    expect(oracle::from(fg.graph).edges == og.edges, "F(G) differs from oracle");
    const std::size_t n = fg.family.size();
    std::vector<MaximalForest> fs;
    for (std::size_t i = 0; i < n; ++i) fs.push_back(fg.family.at(i));
    for (std::size_t i = 0; i < n; ++i) {
      const auto dist = oracle::bfs(og, static_cast<int>(i));
      for (std::size_t j = i; j < n; ++j) {
        const std::size_t d = forest_distance(fs[i], fs[j]);
        expect(static_cast<int>(d) == dist[j], "distance mismatch");
        const auto path = exchange_path(g, fs[i], fs[j]);
        expect(path.size() == d + 1 && path.front() == fs[i] && path.back() == fs[j], "exchange path length");
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
          expect(oracle::symmetric_difference(ints(path[k].edges()), ints(path[k + 1].edges())) == 2,
                 "exchange path step");
        ++pairs;
      }
    }
    ++graphs;
  }
  expect(graphs >= 50, "fewer than 50 graphs");
  return std::to_string(graphs) + " graphs, " + std::to_string(pairs) + " pairs";
}

std::string c4() {
  const Graph f = build_forest_graph(bowtie()).graph;
  const auto o = oracle::from(f);
  expect(o.n == 9 && o.edges.size() == 18, "F(bowtie) order/size");
  expect(o.edges == oracle::forest_graph(oracle::from(bowtie())).edges, "F(bowtie) differs from oracle");
  expect(oracle::isomorphic(o, rook_torus()), "F(bowtie) not C_3 x C_3");
  const auto r = verify_clique_growth(bowtie(), 2);
  expect(r.complete && r.witnesses.size() == 2, "growth chain incomplete");
  const auto& w = r.witnesses[1];
  expect(w.size() == 9, "K_9 witness size");
  expect(w.construction == Construction::FromTwoTriangles, "K_9 witness not built from the product 9-cycle");
  const auto host = oracle::from(w.host);
  expect(host.edges == o.edges, "witness host is not F(bowtie)");
  expect(oracle_clique(host, w.forests), "K_9 witness fails pairwise check");
  return "9 vertices, 18 edges; K_9 in F^2 verified";
}

std::string c5() {
  const Graph f = build_forest_graph(complete_graph(4)).graph;
  const auto o = oracle::from(f);
  expect(o.edges == oracle::forest_graph(oracle::complete(4)).edges, "F(K_4) differs from oracle");
  expect(o.n == 16, "order");
  expect(oracle::connected(o), "disconnected");
  expect(oracle::bridges(o).empty(), "has a bridge");
  const auto deg = oracle::degrees(o);
  expect(*std::min_element(deg.begin(), deg.end()) >= 2, "min degree");
  const auto h = hamiltonian_cycle(f);
  expect(h.status == HamiltonStatus::Found && h.cycle, "no Hamiltonian cycle");
  const auto& vs = h.cycle->vertices;
  std::vector<char> seen(16, 0);
  for (auto v : vs) seen[v] = 1;
  expect(vs.size() == 16 && std::all_of(seen.begin(), seen.end(), [](char c) { return c; }), "cycle misses vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const int a = static_cast<int>(vs[i]), b = static_cast<int>(vs[(i + 1) % vs.size()]);
    expect(std::binary_search(o.edges.begin(), o.edges.end(), std::make_pair(std::min(a, b), std::max(a, b))),
           "cycle uses a non-edge");
  }
  return "16 vertices, min degree " + std::to_string(*std::min_element(deg.begin(), deg.end())) + ", Hamiltonian";
}

// Convergent iff acyclic or the only cycle is a triangle, decided by subset
// search.
bool oracle_convergent(const oracle::Simple& g) {
  const int cycles = oracle::cycle_count(g);
  return cycles == 0 || (cycles == 1 && oracle::max_clique(g) == 3);
}

std::string c6() {
  std::size_t convergent = 0, divergent = 0, bounded = 0;
  for (const auto& g : graphs_up_to(6)) {
    const auto og = oracle::from(g);
    const Verdict v = classify(g);
    expect((v.status == Convergence::Convergent) == oracle_convergent(og), "verdict disagrees with oracle");
    const auto f1 = oracle::forest_graph(og);
    if (v.status == Convergence::Convergent) {
      ++convergent;
      const auto f2 = oracle::forest_graph(f1);
      const auto limit = *v.limit == Limit::K1 ? oracle::Simple{1, {}} : oracle::complete(3);
      expect(oracle::isomorphic(f2, limit), "convergent graph does not reach its limit");
      expect(oracle::isomorphic(oracle::forest_graph(f2), f2), "limit is not a fixed point");
      expect(oracle::isomorphic(oracle::from(iterate_F(g, 2)), limit), "iterate_F disagrees");
      continue;
    }
    ++divergent;
    const Graph h1 = build_forest_graph(g).graph;
    expect(oracle::from(h1).edges == f1.edges, "F(G) differs from oracle");
    const oracle::Int before = oracle::forest_count(og.n, og.edges);
    expect(to_oracle(count_maximal_forests(g)) == before, "count of G differs from oracle");
    // Exact counts of F(G) up to 300 vertices; beyond that two independent
    // certified lower bounds.
    if (f1.n <= 300) {
      const oracle::Int after = to_oracle(count_maximal_forests(h1));
      if (f1.n <= 60) expect(oracle::tree_count_rational(f1) == after, "count of F(G) differs from oracle");
      expect(after >= oracle::tree_count_lower_bound(f1), "count of F(G) below oracle bound");
      expect(after > before, "forest count does not grow");
    } else {
      ++bounded;
      expect(oracle::tree_count_lower_bound(f1) > before, "oracle bound does not show growth");
      expect(to_oracle(forest_count_lower_bound(h1)) > before, "library bound does not show growth");
    }
    const auto r = verify_clique_growth(g, 2);
    expect(r.complete && r.witnesses.size() == 2, "growth chain incomplete: " + r.stopped_reason);
    const auto& w = r.witnesses[1];
    expect(oracle::from(w.host).edges == f1.edges, "second witness host is not F(G)");
    expect(static_cast<int>(w.size()) > oracle::max_clique(og), "F^2 witness not larger than a clique of G");
    expect(oracle_clique(f1, w.forests), "F^2 witness fails pairwise check");
  }
  return std::to_string(convergent) + " convergent, " + std::to_string(divergent) + " divergent (" +
         std::to_string(bounded) + " by bounds)";
}

std::string c7() {
  std::size_t stable = 0, total = 0;
  for (const auto& g : graphs_up_to(5)) {
    ++total;
    const auto og = oracle::from(g);
    const bool oracle_stable = oracle::isomorphic(oracle::forest_graph(og), og);
    const bool is_k1_or_k3 = oracle::isomorphic(og, oracle::complete(1)) || oracle::isomorphic(og, oracle::complete(3));
    expect(is_stable(g) == oracle_stable, "is_stable disagrees with oracle");
    expect(oracle_stable == is_k1_or_k3, "stable graph other than K_1, K_3");
    stable += oracle_stable;
  }
  expect(stable == 2, "expected exactly two stable graphs");
  return std::to_string(stable) + " stable of " + std::to_string(total);
}

bool oracle_confirms(const Graph& g, const NoRootCertificate& c) {
  const auto og = oracle::from(g);
  switch (c.reason) {
    case NoRootReason::Bipartite:
      if (c.coloring.size() != g.order()) return false;
      for (auto [a, b] : og.edges)
        if (c.coloring[a] == c.coloring[b]) return false;
      return true;
    case NoRootReason::HasIsthmusOrIsolated: {
      if (c.isolated) return oracle::degrees(og)[*c.isolated] == 0;
      if (!c.isthmus) return false;
      const auto br = oracle::bridges(og);
      return std::find(br.begin(), br.end(), static_cast<int>(*c.isthmus)) != br.end();
    }
    case NoRootReason::DisconnectedFinite:
      return !oracle::connected(og) && c.parts.size() >= 2;
    default:
      return false;
  }
}

std::string c8() {
  const auto r = find_roots(complete_graph(4));
  expect(r.roots.size() == 1, "expected one root class");
  expect(oracle::isomorphic(oracle::from(r.roots[0].chain.front()), oracle::cycle(4)), "root is not C_4");
  expect(oracle::isomorphic(oracle::forest_graph(oracle::from(r.roots[0].chain.front())), oracle::complete(4)),
         "F(root) is not K_4");

  // Completeness: every connected isthmus-free labeled graph on <= 6 vertices
  // with F(H) = K_4 is a 4-cycle.
  std::size_t found = 0;
  for (int n = 1; n <= 6; ++n) {
    oracle::EdgeList all;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      oracle::Simple h{n, {}};
      for (std::size_t i = 0; i < all.size(); ++i)
        if ((mask >> i) & 1U) h.edges.push_back(all[i]);
      if (oracle::forest_count(n, h.edges, 4) != 4) continue;
      if (!oracle::connected(h) || !oracle::bridges(h).empty()) continue;
      if (!oracle::isomorphic(oracle::forest_graph(h), oracle::complete(4))) continue;
      expect(oracle::isomorphic(h, oracle::cycle(4)), "a root other than C_4");
      ++found;
    }
  }
  expect(found > 0, "oracle found no root");

  const auto d = depth_lower_bound(complete_graph(4));
  expect(d.depth == 1 && d.chain_stops_by_proof && d.stop && d.stop->reason == NoRootReason::Bipartite,
         "depth of K_4 not certified as 1");
  expect(oracle::two_colorable(oracle::from(d.chain->chain.front())), "chain top is not bipartite");

  for (const Graph& g : {cycle_graph(4), complete_bipartite(3, 3)}) {
    const auto c = no_root_prune(g);
    expect(c && c->is_proof() && oracle_confirms(g, *c), "prune missed a bipartite graph");
  }
  std::size_t pruned = 0;
  for (const auto& g : graphs_up_to(6)) {
    const auto og = oracle::from(g);
    if (oracle::bridges(og).empty() && oracle::connected(og)) continue;
    const auto c = no_root_prune(g);
    expect(c.has_value() && oracle_confirms(g, *c), "prune missed a graph with an isthmus or several components");
    ++pruned;
  }
  return "{C_4}; " + std::to_string(found) + " labeled roots checked; depth 1; " + std::to_string(pruned) + " pruned";
}

std::string c9() {
  const auto corpus = graphs_up_to(6);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  std::size_t done = 0;
  while (done < 100) {
    const Graph& g = corpus[pick(rng)];
    const auto moves = applicable_whitney_moves(g);
    if (moves.empty()) continue;
    std::uniform_int_distribution<std::size_t> which(0, moves.size() - 1);
    const auto r = apply_whitney(g, moves[which(rng)]);
    auto before = oracle::maximal_forests(oracle::from(g));
    for (auto& f : before) {
      for (auto& e : f) e = static_cast<int>(r.edge_map[e]);
      std::sort(f.begin(), f.end());
    }
    std::sort(before.begin(), before.end());
    expect(before == oracle::maximal_forests(oracle::from(r.graph)), "forest family changed");
    expect(same_forest_family(g, r.graph, r.edge_map), "library comparison disagrees");
    ++done;
  }
  return std::to_string(done) + " operations";
}

std::string c10() {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<Vertex> vs(n);
    for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<Vertex>(i);
    const Graph host = complete_graph(n + 1);
    const auto w = clique_witness_from_complete(host, vs);
    expect(w.size() == n * n / 4, "K_" + std::to_string(n) + " gives " + std::to_string(w.size()));
    expect(oracle_clique(oracle::from(host), w.forests), "witness fails pairwise check");
  }
  return "n = 2..5";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"F(C_n) is K_n", c1},
      {"K_n has n^(n-2) maximal forests", c2},
      {"forest distance is graph distance", c3},
      {"F(bowtie) is C_3 x C_3; K_9 in F^2", c4},
      {"F(K_4) shape and Hamiltonian cycle", c5},
      {"classification on graphs up to 6 vertices", c6},
      {"stability on graphs up to 5 vertices", c7},
      {"roots and depth of K_4; pruning", c8},
      {"Whitney operations keep the forests", c9},
      {"complete-graph path construction", c10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.why;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("error: ") + e.what();
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::printf("%s %2zu  %-42s %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                detail.c_str(), took.count());
    std::fflush(stdout);
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
