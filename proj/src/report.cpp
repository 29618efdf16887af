#include "forestdyn/report.hpp"

#include <algorithm>

#include "forestdyn/io.hpp"
#include "forestdyn/isomorphism.hpp"
#include "forestdyn/structure.hpp"

namespace forestdyn {

namespace {

bool all_degree(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

std::string limit_name(Limit l) { return l == Limit::K1 ? "K_1" : "K_3"; }

std::string root_names(const RootSearchResult& r) {
  std::string out;
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    if (i) out += ", ";
    out += describe(r.roots[i].chain.front());
  }
  return out;
}

}  // namespace

std::string describe(const Graph& g) {
  const std::size_t n = g.order(), m = g.size();
  const auto nn = std::to_string(n);
  if (m == 0) return n == 1 ? "K_1" : "E_" + nn;
  if (is_complete(g)) return "K_" + nn;
  const bool connected = is_connected(g);
  if (connected && n >= 3 && all_degree(g, 2)) return "C_" + nn;
  if (connected && m + 1 == n) {
    std::size_t leaves = 0, maxdeg = 0;
    for (Vertex v = 0; v < n; ++v) {
      leaves += g.degree(v) == 1;
      maxdeg = std::max(maxdeg, g.degree(v));
    }
    if (maxdeg <= 2 && leaves == 2) return "P_" + nn;
  }
  if (connected) {
    const auto bip = is_bipartite(g);
    if (bip.bipartite) {
      const auto a = static_cast<std::size_t>(std::count(bip.coloring.begin(), bip.coloring.end(), 0));
      const std::size_t b = n - a;
      if (a * b == m) return "K_{" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) + "}";
    }
  }
  if (n == 5 && m == 6 && is_isomorphic(g, bowtie())) return "bowtie";
  return "G(n=" + nn + ", m=" + std::to_string(m) + ")";
}

Json edges_json(const Graph& g, const EdgeSubset& s) {
  Json out = Json::array();
  for (EdgeIndex e : s.indices()) out.push_back({g.name_of(g.edge(e).u), g.name_of(g.edge(e).v)});
  return out;
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  Json out{{"vertices", g.order()}, {"edges", std::move(edges)}};
  if (!g.vertex_names().empty()) out["names"] = g.vertex_names();
  return out;
}

Json verdict_json(const Graph& g, const Verdict& v) {
  Json out;
  out["status"] = v.status == Convergence::Convergent ? "Convergent" : "Divergent";
  out["limit"] = v.limit ? Json(limit_name(*v.limit)) : Json(nullptr);
  out["steps"] = v.steps_to_limit ? Json(*v.steps_to_limit) : Json(nullptr);
  if (v.witness) {
    out["witness_kind"] = v.witness->kind == WitnessKind::LongCycle ? "cycle" : "two-triangles";
    Json cycles = Json::array();
    for (const auto& c : v.witness->cycles) cycles.push_back(edges_json(g, edge_set(g, c)));
    out["witness_edges"] = std::move(cycles);
  } else {
    out["witness_kind"] = nullptr;
    out["witness_edges"] = nullptr;
  }
  return out;
}

std::string verdict_human(const Graph& g, const Verdict& v) {
  if (v.status == Convergence::Convergent)
    return "Convergent; limit: " + limit_name(*v.limit) + "; steps: " +
           std::to_string(*v.steps_to_limit) + "\n";
  std::string out = "Divergent; witness: ";
  const auto& w = *v.witness;
  if (w.kind == WitnessKind::TwoTriangles)
    out += "two edge-disjoint triangles\n";
  else
    out += "cycle of length " + std::to_string(w.cycles.front().length()) + "\n";
  out += "witness edges:";
  for (const auto& c : w.cycles) out += " " + format_edge_names(g, edge_set(g, c));
  return out + "\n";
}

Json growth_json(const GrowthReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"k", s.k},
                     {"clique_size", s.clique_size},
                     {"guaranteed", s.guaranteed},
                     {"construction", to_string(s.construction)},
                     {"cycle_carried", s.cycle_length},
                     {"verified", s.verified}});
  Json out{{"complete", r.complete}, {"steps", std::move(steps)}};
  if (!r.complete) out["stopped"] = r.stopped_reason;
  return out;
}

std::string growth_human(const GrowthReport& r) {
  std::string out;
  for (const auto& s : r.steps)
    out += "F^" + std::to_string(s.k) + ": clique of size " + std::to_string(s.clique_size) +
           " (" + to_string(s.construction) + ", at least " + std::to_string(s.guaranteed) +
           " required) " + (s.verified ? "verified" : "NOT verified") + "\n";
  if (!r.complete) out += "stopped: " + r.stopped_reason + "\n";
  return out;
}

Json no_root_json(const Graph& g, const NoRootCertificate& c) {
  Json out{{"reason", to_string(c.reason)}, {"proof", c.is_proof()}};
  switch (c.reason) {
    case NoRootReason::Bipartite:
      out["coloring"] = c.coloring;
      break;
    case NoRootReason::HasIsthmusOrIsolated:
      if (c.isolated) out["isolated"] = g.name_of(*c.isolated);
      if (c.isthmus) out["isthmus"] = {g.name_of(g.edge(*c.isthmus).u), g.name_of(g.edge(*c.isthmus).v)};
      break;
    case NoRootReason::DisconnectedFinite:
      out["components"] = c.parts;
      break;
    case NoRootReason::ExhaustedBudget:
      out["searched"] = c.budget_note;
      break;
    case NoRootReason::OrderMismatch:
      break;
  }
  return out;
}

Json certificate_json(const RootCertificate& c) {
  Json blocks = Json::array();
  for (const auto& h : c.chain) blocks.push_back(graph_json(h));
  Json maps = Json::array();
  for (const auto& m : c.iso_maps) {
    Json pairs = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) pairs.push_back({i, m[i]});
    maps.push_back(std::move(pairs));
  }
  return Json{{"chain", std::move(blocks)}, {"iso_maps", std::move(maps)}};
}

Json depth_json(const Graph& g, const DepthReport& d) {
  Json out{{"depth_at_least", d.depth},
           {"stable", d.stability_detected},
           {"chain_stops_by_proof", d.chain_stops_by_proof}};
  if (d.chain) out["certificate"] = certificate_json(*d.chain);
  if (d.stop) {
    const Graph& top = d.chain ? d.chain->chain.front() : g;
    out["stop"] = no_root_json(top, *d.stop);
  }
  return out;
}

std::string depth_human(const DepthReport& d) {
  if (d.stability_detected) return "F-stable; depth infinite\n";
  std::string out = "depth " + std::string(d.chain_stops_by_proof && !d.chain ? "= " : "≥ ") +
                    std::to_string(d.depth);
  if (d.chain) {
    out += "; chain:";
    for (const auto& h : d.chain->chain) out += " " + describe(h);
  }
  if (d.stop) out += "; chain stops (" + to_string(d.stop->reason) + ")";
  return out + "\n";
}

Json root_search_json(const Graph& g, const RootSearchResult& r, const DepthReport& d) {
  Json roots = Json::array();
  for (const auto& c : r.roots) roots.push_back({{"root", describe(c.chain.front())}, {"certificate", certificate_json(c)}});
  Json out{{"roots", std::move(roots)}, {"candidates_tested", r.candidates}};
  if (r.none) out["none"] = no_root_json(g, *r.none);
  out["depth"] = depth_json(g, d);
  return out;
}

std::string roots_human(const RootSearchResult& r, const DepthReport& d) {
  if (d.stability_detected)
    return std::to_string(r.roots.size()) + (r.roots.size() == 1 ? " root: " : " roots: ") +
           root_names(r) + "; F-stable, depth infinite\n";
  if (r.roots.empty()) {
    const std::string why = r.none ? to_string(r.none->reason) : "none";
    if (r.none && r.none->is_proof()) return "0 roots: " + why + "; depth 0\n";
    return "0 roots found (" + why + "); depth ≥ 0\n";
  }
  std::string out = std::to_string(r.roots.size()) + (r.roots.size() == 1 ? " root: " : " roots: ") +
                    root_names(r) + "; depth ≥ " + std::to_string(d.depth);
  if (d.stop) out += "; chain stops (" + to_string(d.stop->reason) + ")";
  return out + "\n";
}

Json connectivity_json(const ConnectivityReport& r) {
  Json out{{"vertices", r.vertices}, {"edges", r.edges}, {"connected", r.connected}};
  out["diameter"] = r.connected ? Json(r.diameter) : Json(nullptr);
  return out;
}

Json resource_error_json(const ResourceError& e) {
  Json out{{"error", "budget"}, {"message", e.what()}};
  if (e.count()) {
    out["count"] = to_string(*e.count());
    out["count_is_exact"] = e.count_is_exact();
  }
  if (e.step()) out["step"] = *e.step();
  return out;
}

}  // namespace forestdyn
