#include "forestdyn/roots.hpp"

#include <exception>

#include "forestdyn/corpus.hpp"
#include "forestdyn/error.hpp"
#include "forestdyn/forest_graph.hpp"
#include "forestdyn/matrix_tree.hpp"
#include "forestdyn/structure.hpp"

namespace forestdyn {

namespace {

std::vector<Graph> root_candidates(const RootSearchOptions& options) {
  if (options.max_vertices > kMaxCorpusOrder)
    throw ResourceError("root search: candidate order limit " +
                        std::to_string(options.max_vertices) + " exceeds " +
                        std::to_string(kMaxCorpusOrder));
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= options.max_vertices; ++n)
    for (auto& h : enumerate_graphs(n))
      if (h.size() <= options.max_edges && is_connected(h) && bridges(h).empty())
        out.push_back(std::move(h));
  return out;
}

std::optional<RootCertificate> test_candidate(const Graph& g, const Graph& h,
                                              const RootSearchOptions& options) {
  const ForestGraph fh = build_forest_graph(h, options.budget);
  auto map = find_isomorphism(fh.graph, g, options.iso);
  if (!map) return std::nullopt;
  return RootCertificate{{h, g}, {std::move(*map)}};
}

RootSearchResult screen(const Graph& g, const std::vector<Graph>& candidates,
                        const RootSearchOptions& options) {
  RootSearchResult result;
  if (auto proof = no_root_prune(g)) {
    result.none = std::move(proof);
    return result;
  }
  const BigInt target = g.order();
  std::vector<std::optional<RootCertificate>> hits(candidates.size());
  std::vector<char> examined(candidates.size(), 0);

  if (options.parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(candidates.size()); ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        if (count_maximal_forests(candidates[k]) != target) continue;
        examined[k] = 1;
        hits[k] = test_candidate(g, candidates[k], options);
      } catch (...) {
#pragma omp critical(forestdyn_root_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (count_maximal_forests(candidates[k]) != target) continue;
      examined[k] = 1;
      hits[k] = test_candidate(g, candidates[k], options);
    }
  }

  for (std::size_t k = 0; k < candidates.size(); ++k) {
    result.candidates += examined[k];
    if (hits[k]) result.roots.push_back(std::move(*hits[k]));
  }
  if (result.roots.empty()) {
    NoRootCertificate none;
    none.reason = NoRootReason::ExhaustedBudget;
    none.budget_note = "no root among " + std::to_string(candidates.size()) +
                       " connected isthmus-free graphs with at most " +
                       std::to_string(options.max_vertices) + " vertices and " +
                       std::to_string(options.max_edges) + " edges";
    result.none = std::move(none);
  }
  return result;
}

struct Chain {
  RootCertificate cert;
  NoRootCertificate stop;
};

Chain longest_chain(const Graph& g, const std::vector<Graph>& candidates,
                    const RootSearchOptions& options, std::size_t remaining) {
  Chain best{{{g}, {}}, {}};
  if (remaining == 0) {
    best.stop.budget_note = "depth limit reached";
    return best;
  }
  RootSearchResult found = screen(g, candidates, options);
  if (found.roots.empty()) {
    best.stop = std::move(*found.none);
    return best;
  }
  bool have = false;
  for (auto& root : found.roots) {
    Chain sub = longest_chain(root.chain.front(), candidates, options, remaining - 1);
    sub.cert.chain.push_back(g);
    sub.cert.iso_maps.push_back(std::move(root.iso_maps.front()));
    if (!have || sub.cert.chain.size() > best.cert.chain.size()) {
      best = std::move(sub);
      have = true;
    }
  }
  return best;
}

bool is_k1_or_k3(const Graph& g) {
  return (g.order() == 1 && g.size() == 0) || (g.order() == 3 && g.size() == 3);
}

}  // namespace

std::string to_string(NoRootReason r) {
  switch (r) {
    case NoRootReason::Bipartite: return "bipartite";
    case NoRootReason::HasIsthmusOrIsolated: return "isthmus or isolated vertex";
    case NoRootReason::DisconnectedFinite: return "disconnected";
    case NoRootReason::OrderMismatch: return "empty graph";
    case NoRootReason::ExhaustedBudget: return "search budget exhausted";
  }
  return "unknown";
}

std::optional<NoRootCertificate> no_root_prune(const Graph& g) {
  NoRootCertificate c;
  if (g.order() == 0) {
    c.reason = NoRootReason::OrderMismatch;
    return c;
  }
  if (g.order() == 1 && g.size() == 0) return std::nullopt;

  if (auto bip = is_bipartite(g); bip.bipartite) {
    c.reason = NoRootReason::Bipartite;
    c.coloring = std::move(bip.coloring);
    return c;
  }
  if (auto iso = isolated_vertices(g); !iso.empty()) {
    c.reason = NoRootReason::HasIsthmusOrIsolated;
    c.isolated = iso.front();
    return c;
  }
  if (auto cut = bridges(g); !cut.empty()) {
    c.reason = NoRootReason::HasIsthmusOrIsolated;
    c.isthmus = cut.next(0);
    return c;
  }
  if (auto parts = components(g); parts.size() > 1) {
    c.reason = NoRootReason::DisconnectedFinite;
    c.parts = std::move(parts);
    return c;
  }
  return std::nullopt;
}

bool verify_no_root_certificate(const Graph& g, const NoRootCertificate& cert) {
  const std::size_t n = g.order();
  switch (cert.reason) {
    case NoRootReason::OrderMismatch:
      return n == 0;
    case NoRootReason::Bipartite: {
      if (n < 2 || cert.coloring.size() != n) return false;
      for (const auto& e : g.edges())
        if (cert.coloring[e.u] == cert.coloring[e.v]) return false;
      return true;
    }
    case NoRootReason::HasIsthmusOrIsolated: {
      if (n < 2) return false;
      if (cert.isolated) return *cert.isolated < n && g.degree(*cert.isolated) == 0;
      if (!cert.isthmus || *cert.isthmus >= g.size()) return false;
      EdgeSubset rest = EdgeSubset::full(g.size());
      rest.erase(*cert.isthmus);
      return component_count(edge_subgraph(g, rest)) > component_count(g);
    }
    case NoRootReason::DisconnectedFinite: {
      if (cert.parts.size() < 2) return false;
      std::vector<std::size_t> part(n, cert.parts.size());
      for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        if (cert.parts[i].empty()) return false;
        for (Vertex v : cert.parts[i]) {
          if (v >= n || part[v] != cert.parts.size()) return false;
          part[v] = i;
        }
      }
      for (std::size_t p : part)
        if (p == cert.parts.size()) return false;
      for (const auto& e : g.edges())
        if (part[e.u] != part[e.v]) return false;
      return true;
    }
    case NoRootReason::ExhaustedBudget:
      return false;
  }
  return false;
}

bool verify_root_certificate(const RootCertificate& cert, std::uint64_t budget) {
  if (cert.chain.size() < 2 || cert.iso_maps.size() + 1 != cert.chain.size()) return false;
  for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i) {
    const ForestGraph f = build_forest_graph(cert.chain[i], budget);
    if (!is_isomorphism(f.graph, cert.chain[i + 1], cert.iso_maps[i])) return false;
  }
  return true;
}

RootSearchResult find_roots(const Graph& g, const RootSearchOptions& options) {
  if (auto proof = no_root_prune(g)) {
    RootSearchResult r;
    r.none = std::move(proof);
    return r;
  }
  return screen(g, root_candidates(options), options);
}

DepthReport depth_lower_bound(const Graph& g, const RootSearchOptions& options,
                              std::size_t max_depth) {
  DepthReport report;
  if (is_k1_or_k3(g)) {
    report.stability_detected = true;
    return report;
  }
  if (auto proof = no_root_prune(g)) {
    report.stop = std::move(proof);
    report.chain_stops_by_proof = true;
    return report;
  }
  Chain best = longest_chain(g, root_candidates(options), options, max_depth);
  report.depth = best.cert.depth();
  report.chain_stops_by_proof = best.stop.is_proof();
  report.stop = std::move(best.stop);
  if (report.depth > 0) report.chain = std::move(best.cert);
  return report;
}

}  // namespace forestdyn
