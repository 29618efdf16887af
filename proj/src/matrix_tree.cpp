#include "forestdyn/matrix_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "forestdyn/parallel.hpp"
#include "forestdyn/structure.hpp"

namespace forestdyn {

BigInt determinant_bareiss(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap * n + k] == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap * n + j]);
      sign = -sign;
    }
    const BigInt& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt lead = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = pivot * a[i * n + j] - lead * a[k * n + j];
        a[i * n + j] = v / prev;  // exact by Sylvester's identity
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  BigInt det = a[(n - 1) * n + (n - 1)];
  return sign < 0 ? BigInt(-det) : det;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// The `count` largest primes below 2^31, descending.
std::vector<std::uint64_t> primes(std::size_t count) {
  static std::vector<std::uint64_t> cache;
  std::vector<std::uint64_t> out;
#pragma omp critical(forestdyn_prime_cache)
  {
    std::uint64_t next = cache.empty() ? (std::uint64_t{1} << 31) - 1 : cache.back() - 2;
    while (cache.size() < count) {
      if (is_prime(next)) cache.push_back(next);
      next -= 2;
    }
    out.assign(cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count));
  }
  return out;
}

}  // namespace

std::uint64_t determinant_mod(const IntMatrix& m, std::uint64_t p) {
  const std::size_t n = m.dim();
  std::vector<std::uint64_t> a(n * n);
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = m(i, j) % sp;
      a[i * n + j] = static_cast<std::uint64_t>(v < 0 ? v + sp : v);
    }
  // Barrett reduction for x < 2^63, valid since p < 2^31.
  const auto mu = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
  const auto reduce = [p, mu](std::uint64_t x) {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * mu) >> 64);
    std::uint64_t r = x - q * p;
    return r >= p ? r - p : r;
  };
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = (p - det) % p;
    }
    const std::uint64_t pivot = a[k * n + k];
    det = det * pivot % p;
    const std::uint64_t inv = pow_mod(pivot, p - 2, p);
    const std::uint64_t* rk = &a[k * n];
    for (std::size_t i = k + 1; i < n; ++i) {
      std::uint64_t* ri = &a[i * n];
      if (ri[k] == 0) continue;
      const std::uint64_t f = (p - ri[k] * inv % p) % p;
      for (std::size_t j = k + 1; j < n; ++j) ri[j] = reduce(ri[j] + f * rk[j]);
      ri[k] = 0;
    }
  }
  return det;
}

BigInt determinant_multimodular(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  // Hadamard: |det| <= prod of row norms. Need prod(primes) > 2 * bound.
  double bits = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double sq = 0.0;
    for (std::size_t j = 0; j < n; ++j) sq += static_cast<double>(m(i, j)) * static_cast<double>(m(i, j));
    if (sq == 0.0) return 0;
    bits += 0.5 * std::log2(sq);
  }
  const auto count = static_cast<std::size_t>(std::ceil((bits + 2.0) / 30.0)) + 1;
  const auto ps = primes(count);

  std::vector<std::uint64_t> residues(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k)
    residues[static_cast<std::size_t>(k)] = determinant_mod(m, ps[static_cast<std::size_t>(k)]);

  // Garner-style incremental CRT.
  BigInt x = residues[0];
  BigInt modulus = ps[0];
  for (std::size_t k = 1; k < count; ++k) {
    const std::uint64_t p = ps[k];
    const auto x_mod = static_cast<std::uint64_t>(x % p);
    const auto m_mod = static_cast<std::uint64_t>(modulus % p);
    const std::uint64_t diff = (residues[k] + p - x_mod) % p;
    const std::uint64_t t = diff * pow_mod(m_mod, p - 2, p) % p;
    x += modulus * t;
    modulus *= p;
  }
  if (x * 2 > modulus) x -= modulus;
  return x;
}

IntMatrix reduced_laplacian(const Graph& g, std::span<const Vertex> component) {
  const std::size_t k = component.empty() ? 0 : component.size() - 1;
  std::vector<std::size_t> pos(g.order(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 1; i < component.size(); ++i) pos[component[i]] = i - 1;
  IntMatrix lap(k);
  for (std::size_t i = 1; i < component.size(); ++i) {
    const Vertex v = component[i];
    lap(i - 1, i - 1) = static_cast<std::int64_t>(g.degree(v));
    for (const auto& inc : g.incident(v)) {
      const std::size_t j = pos[inc.neighbor];
      if (j != std::numeric_limits<std::size_t>::max()) lap(i - 1, j) = -1;
    }
  }
  return lap;
}

BigInt count_spanning_trees(const Graph& g, std::span<const Vertex> component) {
  if (component.size() <= 2) return 1;
  const IntMatrix lap = reduced_laplacian(g, component);
  // Bareiss is quicker for small minors; the modular route scales.
  return lap.dim() <= 24 ? determinant_bareiss(lap) : determinant_multimodular(lap);
}

BigInt count_maximal_forests(const Graph& g) {
  // Isthmi lie in every maximal forest, so only the 2-edge-connected pieces count.
  const EdgeSubset cut = bridges(g);
  const Graph core = cut.empty() ? g : edge_subgraph(g, EdgeSubset::full(g.size()) - cut);
  BigInt total = 1;
  for (const auto& block : components(core)) total *= count_spanning_trees(core, block);
  return total;
}

BigInt forest_count_lower_bound(const Graph& g) {
  const std::size_t n = g.order();
  BigInt bound = 1;
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> weight(n, 0);
  for (const auto& block : components(g)) {
    // Maximum cardinality search within the block.
    for (std::size_t step = 0; step < block.size(); ++step) {
      Vertex pick = block[0];
      bool found = false;
      for (Vertex v : block) {
        if (placed[v]) continue;
        if (!found || weight[v] > weight[pick]) {
          pick = v;
          found = true;
        }
      }
      if (step > 0) bound *= weight[pick];
      placed[pick] = 1;
      for (const auto& inc : g.incident(pick))
        if (!placed[inc.neighbor]) ++weight[inc.neighbor];
    }
  }
  return bound;
}

}  // namespace forestdyn
