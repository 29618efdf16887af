#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "forestdyn/graph.hpp"

namespace forestdyn {

inline constexpr std::size_t kMaxCorpusOrder = 7;

// All non-isomorphic simple graphs on exactly n vertices, in canonical
// numbering, ordered by edge count and then canonical edge list. Built by
// adding one edge at a time to each class and keeping canonical forms.
// ResourceError for n > 7.
std::vector<Graph> enumerate_graphs(std::size_t n);

// enumerate_graphs(1) + ... + enumerate_graphs(max_order).
std::vector<Graph> graphs_up_to(std::size_t max_order);

// G(n, p) with a seeded generator; deterministic for a fixed seed.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace forestdyn
