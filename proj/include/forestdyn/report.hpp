#pragma once

#include <string>

#include <json.hpp>

#include "forestdyn/dynamics.hpp"
#include "forestdyn/error.hpp"
#include "forestdyn/forest_graph.hpp"
#include "forestdyn/roots.hpp"

namespace forestdyn {

using Json = nlohmann::ordered_json;

// Short name when g is a standard family member: K_n, C_n, P_n, K_{a,b},
// bowtie, E_n (edgeless). Otherwise "G(n=.., m=..)".
std::string describe(const Graph& g);

Json edges_json(const Graph& g, const EdgeSubset& s);
Json graph_json(const Graph& g);

// Keys: status, limit, steps, witness_kind, witness_edges.
Json verdict_json(const Graph& g, const Verdict& v);
std::string verdict_human(const Graph& g, const Verdict& v);

Json growth_json(const GrowthReport& r);
std::string growth_human(const GrowthReport& r);

Json no_root_json(const Graph& g, const NoRootCertificate& c);
// Ordered edge-list blocks [H_k, ..., G] with the vertex maps between them.
Json certificate_json(const RootCertificate& c);
Json root_search_json(const Graph& g, const RootSearchResult& r, const DepthReport& d);
// "1 root: C_4; depth >= 1; chain stops (bipartite)"
std::string roots_human(const RootSearchResult& r, const DepthReport& d);
Json depth_json(const Graph& g, const DepthReport& d);
std::string depth_human(const DepthReport& d);

Json connectivity_json(const ConnectivityReport& r);

Json resource_error_json(const ResourceError& e);

}  // namespace forestdyn
