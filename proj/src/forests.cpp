#include "forestdyn/forests.hpp"

#include <algorithm>
#include <string>

#include "forestdyn/error.hpp"
#include "forestdyn/matrix_tree.hpp"
#include "forestdyn/structure.hpp"
#include "forestdyn/union_find.hpp"

namespace forestdyn {

std::uint64_t fingerprint(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ (g.order() * 0x100000001b3ULL);
  for (const Edge& e : g.edges()) {
    h ^= (static_cast<std::uint64_t>(e.u) << 32) | e.v;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

bool is_acyclic(const Graph& g, const EdgeSubset& s) {
  if (s.universe() != g.size()) return false;
  UnionFind uf(g.order());
  for (EdgeIndex e : s.indices())
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
  return true;
}

bool is_maximal_forest(const Graph& g, const EdgeSubset& s) {
  if (s.universe() != g.size()) return false;
  UnionFind uf(g.order());
  for (EdgeIndex e : s.indices())
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
  for (EdgeIndex e = 0; e < g.size(); ++e)
    if (!s.contains(e) && !uf.connected(g.edge(e).u, g.edge(e).v)) return false;
  return true;
}

MaximalForest::MaximalForest(const Graph& base, EdgeSubset edges)
    : base_(fingerprint(base)), edges_(std::move(edges)) {
  if (!is_maximal_forest(base, edges_)) throw InputError("edge set is not a maximal forest");
}

MaximalForest ForestFamily::at(std::size_t i) const {
  return MaximalForest(fingerprint(base), members.at(i));
}

std::optional<std::size_t> ForestFamily::find(const EdgeSubset& s) const {
  auto it = std::lower_bound(members.begin(), members.end(), s, lex_less);
  if (it == members.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

namespace {

class ForestEnumerator {
 public:
  ForestEnumerator(const Graph& g, std::vector<EdgeSubset>& out)
      : g_(g), out_(out), uf_(g.order()), included_(g.size()), excluded_(g.size(), 0) {}

  void run() { step(0); }

 private:
  // Whether u and v stay connected once edge `skip` and every excluded edge
  // are removed.
  bool connected_without(Vertex u, Vertex v, EdgeIndex skip) {
    seen_.assign(g_.order(), 0);
    stack_.assign(1, u);
    seen_[u] = 1;
    while (!stack_.empty()) {
      const Vertex x = stack_.back();
      stack_.pop_back();
      for (const auto& inc : g_.incident(x)) {
        if (inc.edge == skip || excluded_[inc.edge] || seen_[inc.neighbor]) continue;
        if (inc.neighbor == v) return true;
        seen_[inc.neighbor] = 1;
        stack_.push_back(inc.neighbor);
      }
    }
    return false;
  }

  void step(EdgeIndex e) {
    if (e == g_.size()) {
      out_.push_back(included_);
      return;
    }
    const Edge& ed = g_.edge(e);
    if (uf_.connected(ed.u, ed.v)) {
      // Closing a cycle: forced out, and connectivity is unaffected.
      excluded_[e] = 1;
      step(e + 1);
      excluded_[e] = 0;
      return;
    }
    uf_.unite(ed.u, ed.v);
    included_.insert(e);
    step(e + 1);
    included_.erase(e);
    uf_.undo();

    // A bridge of what remains is forced in.
    if (connected_without(ed.u, ed.v, e)) {
      excluded_[e] = 1;
      step(e + 1);
      excluded_[e] = 0;
    }
  }

  const Graph& g_;
  std::vector<EdgeSubset>& out_;
  UnionFind uf_;
  EdgeSubset included_;
  std::vector<char> excluded_;
  std::vector<char> seen_;
  std::vector<Vertex> stack_;
};

}  // namespace

ForestFamily maximal_forests(const Graph& g, std::uint64_t budget) {
  const BigInt predicted = count_maximal_forests(g);
  if (predicted > budget)
    throw ResourceError("maximal_forests: " + predicted.str() + " maximal forests exceed budget " +
                            std::to_string(budget),
                        predicted);
  ForestFamily family{g, {}};
  family.members.reserve(static_cast<std::size_t>(predicted));
  ForestEnumerator(g, family.members).run();
  return family;
}

ForestFamily brute_force_maximal_forests(const Graph& g, std::size_t max_edges) {
  const std::size_t m = g.size();
  if (m > max_edges)
    throw ResourceError("brute_force_maximal_forests: " + std::to_string(m) +
                            " edges exceeds limit " + std::to_string(max_edges),
                        BigInt(1) << m);
  ForestFamily family{g, {}};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    EdgeSubset s(m);
    for (EdgeIndex e = 0; e < m; ++e)
      if ((mask >> e) & 1U) s.insert(e);
    if (is_maximal_forest(g, s)) family.members.push_back(std::move(s));
  }
  std::sort(family.members.begin(), family.members.end(), lex_less);
  return family;
}

EdgeSubset extend_to_maximal_edges(const Graph& g, const EdgeSubset& partial) {
  if (partial.universe() != g.size())
    throw InputError("edge subset does not belong to this graph");
  UnionFind uf(g.order());
  for (EdgeIndex e : partial.indices())
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) throw InputError("partial forest contains a cycle");
  EdgeSubset out = partial;
  for (EdgeIndex e = 0; e < g.size(); ++e)
    if (!out.contains(e) && uf.unite(g.edge(e).u, g.edge(e).v)) out.insert(e);
  return out;
}

MaximalForest extend_to_maximal(const Graph& g, const EdgeSubset& partial) {
  return MaximalForest(g, extend_to_maximal_edges(g, partial));
}

}  // namespace forestdyn
