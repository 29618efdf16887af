#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forestdyn/forests.hpp"
#include "forestdyn/graph.hpp"
#include "forestdyn/isomorphism.hpp"

namespace forestdyn {

enum class NoRootReason { Bipartite, HasIsthmusOrIsolated, DisconnectedFinite, OrderMismatch, ExhaustedBudget };

std::string to_string(NoRootReason r);

// Every reason except ExhaustedBudget is a proof that no root exists.
struct NoRootCertificate {
  NoRootReason reason = NoRootReason::ExhaustedBudget;
  std::vector<std::uint8_t> coloring;            // Bipartite: a proper 2-colouring
  std::optional<EdgeIndex> isthmus;              // HasIsthmusOrIsolated
  std::optional<Vertex> isolated;                // HasIsthmusOrIsolated
  std::vector<std::vector<Vertex>> parts;        // DisconnectedFinite: the components
  std::string budget_note;                       // ExhaustedBudget: what was searched

  bool is_proof() const noexcept { return reason != NoRootReason::ExhaustedBudget; }
};

// chain = [H_k, ..., H_1, G] with F(chain[i]) isomorphic to chain[i + 1];
// iso_maps[i][f] is the vertex of chain[i + 1] matched to forest f of
// chain[i] (forests numbered as in maximal_forests).
struct RootCertificate {
  std::vector<Graph> chain;
  std::vector<std::vector<Vertex>> iso_maps;

  std::size_t depth() const noexcept { return chain.empty() ? 0 : chain.size() - 1; }
};

// Proof-grade obstructions, checked in order: empty graph, bipartite (K_1
// excepted), isolated vertex or isthmus, disconnected.
std::optional<NoRootCertificate> no_root_prune(const Graph& g);

// Re-checks a proof certificate from scratch against g.
bool verify_no_root_certificate(const Graph& g, const NoRootCertificate& cert);

// Recomputes every link: F(chain[i]) built, map checked edge by edge.
bool verify_root_certificate(const RootCertificate& cert,
                             std::uint64_t budget = kDefaultForestBudget);

struct RootSearchOptions {
  std::size_t max_vertices = 6;  // candidate order limit, at most 7
  std::size_t max_edges = 20;
  std::uint64_t budget = kDefaultForestBudget;
  IsoOptions iso;
  bool parallel = true;  // false runs the serial reference screen
};

struct RootSearchResult {
  std::vector<RootCertificate> roots;  // one single-link certificate per root class
  std::optional<NoRootCertificate> none;
  std::size_t candidates = 0;          // candidates that reached the isomorphism test
};

// Searches connected isthmus-free graphs on at most max_vertices vertices
// whose forest count equals |V(g)|, keeping those H with F(H) isomorphic to
// g. Results follow the corpus order (edge count, canonical edge list).
RootSearchResult find_roots(const Graph& g, const RootSearchOptions& options = {});

struct DepthReport {
  std::size_t depth = 0;                 // lower bound on the F-depth
  bool stability_detected = false;       // g is K_1 or K_3: depth is infinite
  bool chain_stops_by_proof = false;     // top of the chain provably has no root
  std::optional<RootCertificate> chain;  // present when depth >= 1
  std::optional<NoRootCertificate> stop; // why the chain's top has no further root
};

// Longest root chain reachable by repeated find_roots, up to max_depth links.
DepthReport depth_lower_bound(const Graph& g, const RootSearchOptions& options = {},
                              std::size_t max_depth = 8);

}  // namespace forestdyn
