#include "forestdyn/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

#include "forestdyn/error.hpp"
#include "forestdyn/forest_graph.hpp"
#include "forestdyn/matrix_tree.hpp"
#include "forestdyn/structure.hpp"

namespace forestdyn {

namespace {

// Above this order the exact Laplacian count is skipped when the cheap lower
// bound already settles the budget question.
constexpr std::size_t kExactCountOrder = 256;

bool matches_limit(const Graph& g, Limit limit) {
  const Graph target = limit == Limit::K1 ? empty_graph(1) : complete_graph(3);
  if (g.order() != target.order() || g.size() != target.size()) return false;
  return is_isomorphic(g, target);
}

EdgeSubset without(const EdgeSubset& s, EdgeIndex e) {
  EdgeSubset r = s;
  r.erase(e);
  return r;
}

std::vector<Vertex> longest_cycle_vertices(const Graph& g) {
  std::vector<Vertex> best;
  const auto list = enumerate_cycles(g, 100'000);
  for (const auto& c : list.cycles)
    if (c.length() > best.size()) best = c.vertices;
  return best;
}

std::optional<std::pair<Cycle, Cycle>> disjoint_triangles(const Graph& g) {
  std::vector<Cycle> triangles;
  for (const auto& c : enumerate_cycles(g, 100'000).cycles)
    if (c.length() == 3) triangles.push_back(c);
  for (std::size_t i = 0; i < triangles.size(); ++i)
    for (std::size_t j = i + 1; j < triangles.size(); ++j)
      if ((edge_set(g, triangles[i]) & edge_set(g, triangles[j])).empty())
        return std::pair{triangles[i], triangles[j]};
  return std::nullopt;
}

std::vector<Vertex> to_vertices(const ForestFamily& family, const std::vector<EdgeSubset>& forests) {
  std::vector<Vertex> out;
  out.reserve(forests.size());
  for (const auto& f : forests) {
    const auto idx = family.find(f);
    if (!idx) throw std::logic_error("witness forest missing from its family");
    out.push_back(static_cast<Vertex>(*idx));
  }
  return out;
}

}  // namespace

void require_forest_budget(const Graph& g, std::uint64_t budget, std::size_t step) {
  const BigInt limit = budget;
  if (g.order() > kExactCountOrder) {
    BigInt bound = forest_count_lower_bound(g);
    if (bound > limit)
      throw ResourceError("F^" + std::to_string(step) + " has at least " + to_string(bound) +
                              " maximal forests, over budget " + std::to_string(budget),
                          std::move(bound), false, step);
  }
  BigInt count = count_maximal_forests(g);
  if (count > limit)
    throw ResourceError("F^" + std::to_string(step) + " has " + to_string(count) +
                            " maximal forests, over budget " + std::to_string(budget),
                        std::move(count), true, step);
}

Graph iterate_F(const Graph& g, std::size_t n, std::uint64_t budget) {
  Graph current = g;
  for (std::size_t step = 0; step < n; ++step) {
    require_forest_budget(current, budget, step);
    current = build_forest_graph(current, budget).graph;
  }
  return current;
}

Verdict classify(const Graph& g) {
  Verdict v;
  const std::size_t beta = cyclomatic_number(g);
  std::optional<Limit> limit;
  if (beta == 0) {
    limit = Limit::K1;
  } else if (beta == 1) {
    Cycle c = *unique_cycle(g);
    if (c.length() == 3)
      limit = Limit::K3;
    else
      v.witness = DivergenceWitness{WitnessKind::LongCycle, {std::move(c)}};
  } else {
    std::vector<Cycle> triangles;
    std::optional<Cycle> long_cycle;
    for_each_cycle(g, [&](const Cycle& c) {
      if (c.length() >= 4) {
        long_cycle = c;
        return false;
      }
      triangles.push_back(c);
      return true;
    });
    if (long_cycle) {
      v.witness = DivergenceWitness{WitnessKind::LongCycle, {std::move(*long_cycle)}};
    } else {
      for (std::size_t i = 0; i < triangles.size() && !v.witness; ++i)
        for (std::size_t j = i + 1; j < triangles.size(); ++j)
          if ((edge_set(g, triangles[i]) & edge_set(g, triangles[j])).empty()) {
            v.witness = DivergenceWitness{WitnessKind::TwoTriangles, {triangles[i], triangles[j]}};
            break;
          }
      if (!v.witness) throw std::logic_error("classify: no divergence witness found");
    }
  }

  if (!limit) {
    v.status = Convergence::Divergent;
    return v;
  }
  v.status = Convergence::Convergent;
  v.limit = limit;
  Graph current = g;
  for (std::size_t k = 0; k <= 2; ++k) {
    if (matches_limit(current, *limit)) {
      v.steps_to_limit = k;
      break;
    }
    if (k < 2) current = build_forest_graph(current).graph;
  }
  if (!v.steps_to_limit) throw std::logic_error("classify: limit not reached within two steps");
  return v;
}

bool is_stable(const Graph& g, std::uint64_t budget, const IsoOptions& iso) {
  if (count_maximal_forests(g) != g.order()) return false;
  if (g.order() > budget)
    throw ResourceError("is_stable: forest count over budget", BigInt(g.order()));
  return is_isomorphic(build_forest_graph(g, budget).graph, g, iso);
}

std::optional<std::size_t> period_scan(const Graph& g, std::size_t max_period,
                                       std::uint64_t budget, const IsoOptions& iso) {
  Graph current = g;
  try {
    for (std::size_t p = 1; p <= max_period; ++p) {
      require_forest_budget(current, budget, p - 1);
      current = build_forest_graph(current, budget).graph;
      if (current.order() == g.order() && current.size() == g.size() &&
          is_isomorphic(current, g, iso))
        return p;
    }
  } catch (const ResourceError&) {
  }
  return std::nullopt;
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::FromCycle: return "from-cycle";
    case Construction::FromKnPath: return "from-Kn-path";
    case Construction::FromTwoTriangles: return "from-two-triangles";
  }
  return "unknown";
}

bool verify_clique_witness(const CliqueWitness& w) {
  for (const auto& f : w.forests)
    if (f.universe() != w.host.size() || !is_maximal_forest(w.host, f)) return false;
  for (std::size_t i = 0; i < w.forests.size(); ++i)
    for (std::size_t j = i + 1; j < w.forests.size(); ++j)
      if (symmetric_difference_count(w.forests[i], w.forests[j]) != 2) return false;
  return true;
}

bool verify_triangle_product(const TriangleProductWitness& w) {
  if (w.forests.size() != 9 || w.nine_cycle.size() != 9) return false;
  for (const auto& f : w.forests)
    if (f.universe() != w.host.size() || !is_maximal_forest(w.host, f)) return false;
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = a + 1; b < 9; ++b) {
      const bool rook = (a / 3 == b / 3) != (a % 3 == b % 3);
      const bool exchange = symmetric_difference_count(w.forests[a], w.forests[b]) == 2;
      if (rook != exchange) return false;
    }
  std::vector<char> seen(9, 0);
  for (std::size_t i = 0; i < 9; ++i) {
    const std::size_t a = w.nine_cycle[i], b = w.nine_cycle[(i + 1) % 9];
    if (a >= 9 || seen[a]) return false;
    seen[a] = 1;
    if (symmetric_difference_count(w.forests[a], w.forests[b]) != 2) return false;
  }
  return true;
}

CliqueWitness clique_witness_from_cycle(const Graph& g, const Cycle& c) {
  if (!is_cycle(g, c)) throw InputError("clique_witness_from_cycle: not a cycle of the graph");
  const EdgeSubset cycle = edge_set(g, c);
  const EdgeSubset p1 = without(cycle, c.edges[0]);
  const EdgeSubset rest = extend_to_maximal_edges(g, p1) - p1;
  CliqueWitness w{g, {}, Construction::FromCycle};
  for (EdgeIndex e : c.edges) w.forests.push_back(rest | without(cycle, e));
  return w;
}

CliqueWitness clique_witness_from_complete(const Graph& g, std::span<const Vertex> clique) {
  const std::size_t n = clique.size();
  if (n < 2) throw InputError("clique_witness_from_complete: need at least two vertices");
  for (Vertex v : clique)
    if (v >= g.order()) throw InputError("clique_witness_from_complete: vertex out of range");
  if (!is_clique(g, clique)) throw InputError("clique_witness_from_complete: vertices do not form a clique");

  EdgeSubset path(g.size());
  for (std::size_t i = 0; i + 1 < n; ++i) path.insert(*g.edge_index(clique[i], clique[i + 1]));
  const EdgeSubset base = extend_to_maximal_edges(g, path);
  const std::size_t h = n / 2;
  const EdgeIndex middle = *g.edge_index(clique[h - 1], clique[h]);
  const EdgeSubset cut = without(base, middle);

  CliqueWitness w{g, {}, Construction::FromKnPath};
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = h; j < n; ++j) {
      EdgeSubset f = cut;
      f.insert(*g.edge_index(clique[i], clique[j]));
      w.forests.push_back(std::move(f));
    }
  return w;
}

TriangleProductWitness clique_witness_from_two_triangles(const Graph& g, const Cycle& t1,
                                                         const Cycle& t2) {
  if (!is_cycle(g, t1) || !is_cycle(g, t2) || t1.length() != 3 || t2.length() != 3)
    throw InputError("clique_witness_from_two_triangles: arguments must be triangles of the graph");
  const EdgeSubset a = edge_set(g, t1), b = edge_set(g, t2);
  if (!(a & b).empty()) throw InputError("clique_witness_from_two_triangles: triangles share an edge");

  const EdgeSubset both = a | b;
  const EdgeSubset first = without(without(both, t1.edges[0]), t2.edges[0]);
  const EdgeSubset rest = extend_to_maximal_edges(g, first) - first;
  TriangleProductWitness w{g, {}, {0, 1, 2, 5, 3, 4, 7, 8, 6}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      w.forests.push_back(rest | without(without(both, t1.edges[i]), t2.edges[j]));
  return w;
}

std::optional<std::vector<EdgeSubset>> cayley_cycle(const Graph& g, std::span<const Vertex> clique) {
  const std::size_t t = clique.size();
  if (t < 3 || t > 5) return std::nullopt;
  if (!is_clique(g, clique)) throw InputError("cayley_cycle: vertices do not form a clique");

  const Graph kt = complete_graph(t);
  const ForestGraph trees = build_forest_graph(kt);
  std::vector<EdgeIndex> lift_edge(kt.size());
  for (EdgeIndex e = 0; e < kt.size(); ++e)
    lift_edge[e] = *g.edge_index(clique[kt.edge(e).u], clique[kt.edge(e).v]);
  const auto lift = [&](const EdgeSubset& s) {
    EdgeSubset r(g.size());
    for (EdgeIndex e : s.indices()) r.insert(lift_edge[e]);
    return r;
  };

  HamiltonResult tour;
  try {
    tour = hamiltonian_cycle(trees.graph);
  } catch (const ResourceError&) {
    return std::nullopt;
  }
  if (!tour.cycle) return std::nullopt;

  const EdgeSubset t0 = lift(trees.family.members[0]);
  const EdgeSubset rest = extend_to_maximal_edges(g, t0) - t0;
  std::vector<EdgeSubset> out;
  for (Vertex v : tour.cycle->vertices) out.push_back(rest | lift(trees.family.members[v]));
  return out;
}

GrowthReport verify_clique_growth(const Graph& g, std::size_t m, std::uint64_t budget) {
  if (classify(g).status != Convergence::Divergent)
    throw InputError("verify_clique_growth: graph is F-convergent");

  GrowthReport report;
  // Objects carried between levels, as vertices of the current graph H.
  Graph host = g;
  std::vector<Vertex> clique;
  try {
    clique = max_clique(g);
  } catch (const ResourceError&) {
    clique = {g.edge(0).u, g.edge(0).v};
  }
  std::vector<Vertex> cycle = longest_cycle_vertices(g);
  Construction cycle_tag = Construction::FromCycle;
  std::optional<TriangleProductWitness> product;
  if (auto tt = disjoint_triangles(g)) product = clique_witness_from_two_triangles(g, tt->first, tt->second);

  for (std::size_t k = 1; k <= m; ++k) {
    // The witness for F^k(G) consists of maximal forests of H = F^(k-1)(G).
    CliqueWitness best{host, {}, Construction::FromCycle};
    if (cycle.size() >= 3) {
      best = clique_witness_from_cycle(host, cycle_through(host, cycle));
      best.construction = cycle_tag;
    }
    if (clique.size() >= 2 && (clique.size() * clique.size()) / 4 > best.size())
      best = clique_witness_from_complete(host, clique);

    GrowthStep step;
    step.k = k;
    step.clique_size = best.size();
    step.guaranteed = k * k;
    step.construction = best.construction;
    step.verified = verify_clique_witness(best);

    if (k == m) {
      report.steps.push_back(step);
      report.witnesses.push_back(std::move(best));
      break;
    }

    std::vector<EdgeSubset> next_cycle;
    if (best.size() >= 3) next_cycle = best.forests;
    if (auto tour = cayley_cycle(host, clique); tour && tour->size() > next_cycle.size())
      next_cycle = std::move(*tour);
    cycle_tag = Construction::FromCycle;
    if (k == 1 && product && product->forests.size() > next_cycle.size()) {
      next_cycle.clear();
      for (std::size_t i : product->nine_cycle) next_cycle.push_back(product->forests[i]);
      cycle_tag = Construction::FromTwoTriangles;
    }
    step.cycle_length = next_cycle.size();
    report.steps.push_back(step);

    ForestGraph next;
    try {
      require_forest_budget(host, budget, k);
      next = build_forest_graph(host, budget);
    } catch (const ResourceError& e) {
      report.witnesses.push_back(std::move(best));
      report.stopped_reason = e.what();
      return report;
    }
    clique = to_vertices(next.family, best.forests);
    cycle = to_vertices(next.family, next_cycle);
    report.witnesses.push_back(std::move(best));
    host = std::move(next.graph);
  }
  report.complete = true;
  return report;
}

}  // namespace forestdyn
