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

// F^n(G), built step by step. Before each step the forest count of the
// current graph is checked against `budget`; ResourceError carries the step
// reached and the count (exact when the graph is small enough to count
// exactly, otherwise a certified lower bound that already exceeds budget).
Graph iterate_F(const Graph& g, std::size_t n, std::uint64_t budget = kDefaultForestBudget);

// Throws the ResourceError iterate_F would raise if `g` has more than
// `budget` maximal forests.
void require_forest_budget(const Graph& g, std::uint64_t budget, std::size_t step);

enum class Convergence { Convergent, Divergent };
enum class Limit { K1, K3 };
enum class WitnessKind { LongCycle, TwoTriangles };

struct DivergenceWitness {
  WitnessKind kind = WitnessKind::LongCycle;
  std::vector<Cycle> cycles;  // one cycle of length >= 4, or two triangles
};

struct Verdict {
  Convergence status = Convergence::Divergent;
  std::optional<Limit> limit;
  std::optional<std::size_t> steps_to_limit;
  std::optional<DivergenceWitness> witness;
};

// Convergent iff acyclic (limit K_1) or the only cycle is a triangle (limit
// K_3). steps_to_limit is measured by isomorphism at steps 0, 1, 2.
Verdict classify(const Graph& g);

// F(G) isomorphic to G.
bool is_stable(const Graph& g, std::uint64_t budget = kDefaultForestBudget,
               const IsoOptions& iso = {});

// Exploratory only: smallest n <= max_period with F^n(G) isomorphic to G,
// within budget. Returns nullopt when none is found or a budget is hit.
std::optional<std::size_t> period_scan(const Graph& g, std::size_t max_period,
                                       std::uint64_t budget = kDefaultForestBudget,
                                       const IsoOptions& iso = {});

enum class Construction { FromCycle, FromKnPath, FromTwoTriangles };

std::string to_string(Construction c);

// Maximal forests of `host` that are pairwise one exchange apart, hence a
// complete subgraph of F(host).
struct CliqueWitness {
  Graph host;
  std::vector<EdgeSubset> forests;
  Construction construction = Construction::FromCycle;

  std::size_t size() const noexcept { return forests.size(); }
};

// Every member a maximal forest of host; every pair at symmetric difference 2.
bool verify_clique_witness(const CliqueWitness& w);

// The nine forests obtained from two edge-disjoint triangles; forests[3*i+j]
// drops edge i of the first triangle and edge j of the second. They induce
// C_3 x C_3 in F(host); nine_cycle lists a Hamiltonian cycle of it.
struct TriangleProductWitness {
  Graph host;
  std::vector<EdgeSubset> forests;
  std::vector<std::size_t> nine_cycle;
};

bool verify_triangle_product(const TriangleProductWitness& w);

// The n forests F_i = F_1 - P_1 + P_i with P_i the cycle minus its i-th edge.
CliqueWitness clique_witness_from_cycle(const Graph& g, const Cycle& c);

// floor(n^2/4) forests: extend the path through `clique` (in the given
// order) to a maximal forest and swap its middle edge for each cross pair.
CliqueWitness clique_witness_from_complete(const Graph& g, std::span<const Vertex> clique);

TriangleProductWitness clique_witness_from_two_triangles(const Graph& g, const Cycle& t1,
                                                         const Cycle& t2);

// Spanning trees of a complete subgraph K_t, each extended by the same
// outside edges, ordered along a Hamiltonian cycle of their exchange graph.
// Consecutive members are one exchange apart. nullopt if t < 3, t > 5 or the
// Hamiltonian search runs out of budget.
std::optional<std::vector<EdgeSubset>> cayley_cycle(const Graph& g, std::span<const Vertex> clique);

struct GrowthStep {
  std::size_t k = 0;                // witness lives in F^k(G)
  std::size_t clique_size = 0;
  std::size_t guaranteed = 0;       // k^2
  Construction construction = Construction::FromCycle;
  std::size_t cycle_length = 0;     // longest cycle carried into step k + 1
  bool verified = false;
};

struct GrowthReport {
  std::vector<GrowthStep> steps;
  std::vector<CliqueWitness> witnesses;  // one per completed step
  bool complete = false;
  std::string stopped_reason;            // set when a budget cut the chain short
};

// Chains the clique constructions for k = 1..m: a cycle of length n gives
// K_n one level up, K_s gives K_floor(s^2/4), K_t (t <= 5) gives a cycle of
// length t^(t-2) one level up, two edge-disjoint triangles give a 9-cycle.
// Each level's witness is verified pairwise. InputError unless classify(g)
// is Divergent.
GrowthReport verify_clique_growth(const Graph& g, std::size_t m,
                                  std::uint64_t budget = kDefaultForestBudget);

}  // namespace forestdyn
