#include "forestdyn/checks.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "forestdyn/corpus.hpp"
#include "forestdyn/dynamics.hpp"
#include "forestdyn/error.hpp"
#include "forestdyn/forest_graph.hpp"
#include "forestdyn/isomorphism.hpp"
#include "forestdyn/matrix_tree.hpp"
#include "forestdyn/report.hpp"
#include "forestdyn/roots.hpp"
#include "forestdyn/structure.hpp"
#include "forestdyn/whitney.hpp"

namespace forestdyn {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string big(const BigInt& x) { return to_string(x); }

Outcome cycles_give_complete() {
  Outcome o;
  for (std::size_t n = 3; n <= 7; ++n)
    if (!is_isomorphic(build_forest_graph(cycle_graph(n)).graph, complete_graph(n)))
      o.fail("F(C_" + std::to_string(n) + ") is not K_" + std::to_string(n));
  if (o.passed) o.detail = "n = 3..7";
  return o;
}

Outcome cayley_counts() {
  Outcome o;
  for (std::size_t n = 2; n <= 8; ++n) {
    BigInt expect = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) expect *= n;
    const BigInt got = count_maximal_forests(complete_graph(n));
    if (got != expect) o.fail("K_" + std::to_string(n) + ": " + big(got) + " != " + big(expect));
    if (n <= 6 && maximal_forests(complete_graph(n)).size() != got)
      o.fail("K_" + std::to_string(n) + ": enumeration disagrees with the count");
  }
  if (o.passed) o.detail = "n = 2..8, enumerated to n = 6";
  return o;
}

Outcome distance_is_exchange_distance(const std::vector<Graph>& corpus) {
  Outcome o;
  std::size_t graphs = 0;
  for (const auto& g : corpus) {
    if (count_maximal_forests(g) > 500) continue;
    ++graphs;
    const ForestGraph fg = build_forest_graph(g);
    const std::size_t n = fg.family.size();
    std::vector<MaximalForest> forests;
    for (std::size_t i = 0; i < n; ++i) forests.push_back(fg.family.at(i));
    for (std::size_t i = 0; i < n; ++i) {
      const auto dist = bfs_distances(fg.graph, static_cast<Vertex>(i));
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t d = forest_distance(forests[i], forests[j]);
        if (d != dist[j]) o.fail(describe(g) + ": distance " + std::to_string(d) + " vs " + std::to_string(dist[j]));
        if (i < j && exchange_path(g, forests[i], forests[j]).size() != d + 1)
          o.fail("exchange path length mismatch");
      }
    }
  }
  if (o.passed) o.detail = std::to_string(graphs) + " graphs";
  return o;
}

Outcome two_triangles(std::uint64_t budget) {
  Outcome o;
  const Graph product = cartesian_product(complete_graph(3), complete_graph(3));
  if (!is_isomorphic(build_forest_graph(bowtie()).graph, product)) o.fail("F(bowtie) is not C_3 x C_3");
  const Graph two = disjoint_union(complete_graph(3), complete_graph(3));
  if (!is_isomorphic(build_forest_graph(two).graph, product)) o.fail("F(2 K_3) is not C_3 x C_3");
  const auto report = verify_clique_growth(bowtie(), 2, budget);
  if (!report.complete || report.steps.size() != 2 || report.steps[1].clique_size < 9 || !report.steps[1].verified)
    o.fail("no verified K_9 in F^2(bowtie)");
  if (o.passed) o.detail = "K_9 verified in F^2(bowtie)";
  return o;
}

Outcome forest_graph_shape(const std::vector<Graph>& corpus) {
  Outcome o;
  std::size_t graphs = 0;
  for (const auto& g : corpus) {
    if (cyclomatic_number(g) == 0 || count_maximal_forests(g) > 2000) continue;
    ++graphs;
    const Graph f = build_forest_graph(g).graph;
    if (!is_connected(f)) o.fail("F(G) disconnected");
    if (!bridges(f).empty()) o.fail("F(G) has an isthmus");
    for (Vertex v = 0; v < f.order(); ++v)
      if (f.degree(v) < 2) o.fail("F(G) has a vertex of degree < 2");
  }
  const auto tour = hamiltonian_cycle(build_forest_graph(complete_graph(4)).graph);
  if (tour.status != HamiltonStatus::Found) o.fail("F(K_4) has no Hamiltonian cycle");
  if (o.passed) o.detail = std::to_string(graphs) + " graphs; F(K_4) Hamiltonian";
  return o;
}

Outcome classification(const std::vector<Graph>& corpus, std::uint64_t budget) {
  Outcome o;
  for (const auto& g : corpus) {
    const Verdict v = classify(g);
    if (v.status == Convergence::Convergent) {
      const Graph limit = *v.limit == Limit::K1 ? empty_graph(1) : complete_graph(3);
      const Graph f2 = iterate_F(g, 2, budget);
      if (!is_isomorphic(f2, limit) || !is_isomorphic(build_forest_graph(f2).graph, f2))
        o.fail("convergent graph " + describe(g) + " misses its limit");
    } else {
      const auto w = v.witness;
      if (!w) {
        o.fail("divergent verdict without witness");
        continue;
      }
      const BigInt before = count_maximal_forests(g);
      const BigInt after = count_maximal_forests(build_forest_graph(g, budget).graph);
      if (after <= before) o.fail("forest count did not grow for " + describe(g));
    }
  }
  if (o.passed) o.detail = std::to_string(corpus.size()) + " graphs";
  return o;
}

Outcome stability(const std::vector<Graph>& corpus) {
  Outcome o;
  std::size_t stable = 0;
  for (const auto& g : corpus) {
    const bool expect = (g.order() == 1) || (g.order() == 3 && g.size() == 3);
    const bool got = is_stable(g);
    stable += got;
    if (got != expect) o.fail(describe(g) + (got ? " is stable" : " is not stable"));
  }
  if (o.passed) o.detail = std::to_string(stable) + " stable of " + std::to_string(corpus.size());
  return o;
}

Outcome roots_of_k4() {
  Outcome o;
  const auto r = find_roots(complete_graph(4));
  if (r.roots.size() != 1 || !is_isomorphic(r.roots[0].chain.front(), cycle_graph(4)))
    o.fail("roots of K_4 are not exactly {C_4}");
  for (const auto& c : r.roots)
    if (!verify_root_certificate(c)) o.fail("root certificate does not verify");
  const auto d = depth_lower_bound(complete_graph(4));
  if (d.depth != 1 || !d.chain_stops_by_proof) o.fail("depth of K_4 not certified as 1");
  for (const Graph& g : {cycle_graph(4), complete_bipartite(3, 3)}) {
    const auto c = no_root_prune(g);
    if (!c || !verify_no_root_certificate(g, *c)) o.fail(describe(g) + " not pruned");
  }
  if (o.passed) o.detail = "K_4 <- C_4, chain stops (bipartite)";
  return o;
}

Outcome whitney(const std::vector<Graph>& corpus, std::size_t count, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_graph(0, corpus.size() - 1);
  std::size_t done = 0, attempts = 0;
  while (done < count && attempts < 100 * count) {
    ++attempts;
    const Graph& g = corpus[pick_graph(rng)];
    const auto moves = applicable_whitney_moves(g);
    if (moves.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick_move(0, moves.size() - 1);
    const auto result = apply_whitney(g, moves[pick_move(rng)]);
    ++done;
    if (!same_forest_family(g, result.graph, result.edge_map)) o.fail("forest family changed for " + describe(g));
  }
  if (done < count) o.fail("only " + std::to_string(done) + " applicable operations found");
  if (o.passed) o.detail = std::to_string(done) + " operations";
  return o;
}

Outcome path_construction() {
  Outcome o;
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<Vertex> verts(n);
    for (std::size_t i = 0; i < n; ++i) verts[i] = static_cast<Vertex>(i);
    const auto w = clique_witness_from_complete(complete_graph(n + 1), verts);
    if (w.size() != n * n / 4 || !verify_clique_witness(w))
      o.fail("K_" + std::to_string(n) + " gives " + std::to_string(w.size()) + " forests");
  }
  if (o.passed) o.detail = "n = 2..5";
  return o;
}

Outcome clique_growth(std::uint64_t budget) {
  Outcome o;
  struct Case {
    Graph g;
    std::size_t m;
    std::size_t expect;
  };
  for (const auto& c : {Case{cycle_graph(4), 1, 4}, Case{cycle_graph(5), 2, 6}, Case{bowtie(), 2, 9},
                        Case{complete_graph(4), 2, 16}}) {
    const auto r = verify_clique_growth(c.g, c.m, budget);
    if (!r.complete) {
      o.fail(describe(c.g) + ": " + r.stopped_reason);
      continue;
    }
    for (const auto& s : r.steps)
      if (!s.verified || s.clique_size < s.guaranteed) o.fail(describe(c.g) + ": step below its guarantee");
    if (r.steps.back().clique_size < c.expect) o.fail(describe(c.g) + ": witness too small");
  }
  if (o.passed) o.detail = "C_4, C_5, bowtie, K_4";
  return o;
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  const auto corpus = graphs_up_to(options.corpus_order);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> suite{
      {"forest graph of a cycle is complete", cycles_give_complete},
      {"forest counts of K_n follow n^(n-2)", cayley_counts},
      {"forest distance equals exchange distance", [&] { return distance_is_exchange_distance(corpus); }},
      {"two edge-disjoint triangles give C_3 x C_3 and K_9", [&] { return two_triangles(options.budget); }},
      {"forest graphs are connected, isthmus-free, min degree 2", [&] { return forest_graph_shape(corpus); }},
      {"convergence classification matches iteration", [&] { return classification(corpus, options.budget); }},
      {"only K_1 and K_3 are stable", [&] { return stability(corpus); }},
      {"roots and depth of K_4", roots_of_k4},
      {"Whitney operations preserve maximal forests",
       [&] { return whitney(corpus, options.whitney_moves, options.seed); }},
      {"K_n path construction gives floor(n^2/4) forests", path_construction},
      {"clique growth under iteration", [&] { return clique_growth(options.budget); }},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, run] : suite) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("error: ") + e.what());
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    results.push_back({name, o.passed, o.detail, took.count()});
  }
  return results;
}

}  // namespace forestdyn
