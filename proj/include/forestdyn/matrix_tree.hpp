#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "forestdyn/bigint.hpp"
#include "forestdyn/graph.hpp"

namespace forestdyn {

// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n = 0) : n_(n), a_(n * n, 0) {}

  std::size_t dim() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> a_;
};

// Fraction-free Gaussian elimination over big integers. Serial reference.
BigInt determinant_bareiss(const IntMatrix& m);

// Determinant modulo each of enough 31-bit primes to exceed twice the
// Hadamard bound, recombined by CRT. Primes are processed in parallel.
BigInt determinant_multimodular(const IntMatrix& m);

// Determinant of `m` modulo the prime `p` (p < 2^31).
std::uint64_t determinant_mod(const IntMatrix& m, std::uint64_t p);

// Laplacian of the subgraph induced by `component` with its first vertex's
// row and column removed.
IntMatrix reduced_laplacian(const Graph& g, std::span<const Vertex> component);

BigInt count_spanning_trees(const Graph& g, std::span<const Vertex> component);

// Number of maximal forests: product over components of any Laplacian
// cofactor. Exact.
BigInt count_maximal_forests(const Graph& g);

// Certified lower bound on count_maximal_forests, cheap to compute: order the
// vertices of each component by maximum cardinality search; every choice of
// one earlier neighbour per vertex gives a distinct spanning tree.
BigInt forest_count_lower_bound(const Graph& g);

}  // namespace forestdyn
