#include "forestdyn/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "forestdyn/error.hpp"

namespace forestdyn {

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map) {
  if (g.order() != h.order() || g.size() != h.size() || map.size() != g.order()) return false;
  std::vector<char> hit(h.order(), 0);
  for (Vertex v : map) {
    if (v >= h.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (const Edge& e : g.edges())
    if (!h.adjacent(map[e.u], map[e.v])) return false;
  return true;
}

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Equitable refinement. Sub-cells are ordered by their neighbour-count
// signature against the current partition, so the result depends only on
// the graph structure and the incoming cell order.
void refine(const Graph& g, Partition& p) {
  std::vector<std::size_t> cell_of(g.order());
  while (true) {
    for (std::size_t c = 0; c < p.size(); ++c)
      for (Vertex v : p[c]) cell_of[v] = c;
    Partition next;
    next.reserve(g.order());
    bool changed = false;
    for (const Cell& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<std::uint32_t>, Cell> groups;
      for (Vertex v : cell) {
        std::vector<std::uint32_t> sig(p.size(), 0);
        for (const auto& inc : g.incident(v)) ++sig[cell_of[inc.neighbor]];
        groups[std::move(sig)].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    p = std::move(next);
    if (!changed) return;
  }
}

class Canonizer {
 public:
  Canonizer(const Graph& g, const IsoOptions& opt) : g_(g), opt_(opt) {}

  CanonicalLabeling run() {
    Partition p;
    // Start from degree classes; `refine` would find them anyway.
    std::map<std::size_t, Cell> by_degree;
    for (Vertex v = 0; v < g_.order(); ++v) by_degree[g_.degree(v)].push_back(v);
    for (auto& [d, cell] : by_degree) p.push_back(std::move(cell));
    std::vector<Vertex> path;
    search(std::move(p), path);
    CanonicalLabeling out;
    out.form.order = g_.order();
    out.form.edges = best_code_;
    out.position = best_position_;
    return out;
  }

 private:
  std::vector<Edge> code_for(const std::vector<Vertex>& position) const {
    std::vector<Edge> code;
    code.reserve(g_.size());
    for (const Edge& e : g_.edges()) {
      const Vertex a = position[e.u], b = position[e.v];
      code.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(code.begin(), code.end());
    return code;
  }

  void leaf(const Partition& p) {
    if (++leaves_ > opt_.leaf_budget)
      throw ResourceError("canonical_form: leaf budget of " + std::to_string(opt_.leaf_budget) +
                          " exhausted");
    std::vector<Vertex> position(g_.order());
    for (std::size_t c = 0; c < p.size(); ++c) position[p[c][0]] = static_cast<Vertex>(c);
    auto code = code_for(position);
    if (!have_best_ || code < best_code_) {
      best_code_ = std::move(code);
      best_position_ = std::move(position);
      have_best_ = true;
    } else if (code == best_code_) {
      // v -> u with best_position[u] == position[v] is an automorphism.
      std::vector<Vertex> inverse_best(g_.order());
      for (Vertex u = 0; u < g_.order(); ++u) inverse_best[best_position_[u]] = u;
      std::vector<Vertex> gamma(g_.order());
      for (Vertex v = 0; v < g_.order(); ++v) gamma[v] = inverse_best[position[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbit representative of v under the automorphisms found so far that fix
  // every vertex of `path`.
  std::vector<Vertex> orbits(const std::vector<Vertex>& path) const {
    std::vector<Vertex> parent(g_.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < g_.order(); ++v) {
        const Vertex a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < g_.order(); ++v) parent[v] = find(v);
    return parent;
  }

  void search(Partition p, std::vector<Vertex>& path) {
    refine(g_, p);
    if (p.size() == g_.order()) {
      leaf(p);
      return;
    }
    std::size_t target = 0;
    while (p[target].size() == 1) ++target;
    const Cell cell = p[target];
    std::vector<Vertex> explored;
    for (Vertex v : cell) {
      if (!explored.empty()) {
        const auto orbit = orbits(path);
        if (std::any_of(explored.begin(), explored.end(),
                        [&](Vertex u) { return orbit[u] == orbit[v]; }))
          continue;
      }
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c != target) {
          child.push_back(p[c]);
          continue;
        }
        child.push_back({v});
        Cell rest;
        for (Vertex w : cell)
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      path.push_back(v);
      search(std::move(child), path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  const Graph& g_;
  const IsoOptions& opt_;
  std::uint64_t leaves_ = 0;
  bool have_best_ = false;
  std::vector<Edge> best_code_;
  std::vector<Vertex> best_position_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

CanonicalLabeling identity_labeling(const Graph& g) {
  CanonicalLabeling out;
  out.form.order = g.order();
  out.form.edges = g.edges();
  out.position.resize(g.order());
  std::iota(out.position.begin(), out.position.end(), 0);
  return out;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, const IsoOptions& options) {
  if (is_complete(g) || g.size() == 0) return identity_labeling(g);
  if (g.order() > options.max_vertices)
    throw ResourceError("isomorphism: " + std::to_string(g.order()) +
                            " vertices exceeds the generic-path limit of " +
                            std::to_string(options.max_vertices),
                        BigInt(g.order()));
  return Canonizer(g, options).run();
}

CanonicalForm canonical_form(const Graph& g, const IsoOptions& options) {
  return canonical_labeling(g, options).form;
}

Graph canonical_graph(const Graph& g, const IsoOptions& options) {
  const auto form = canonical_form(g, options);
  return build_graph(form.order, form.edges);
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h,
                                                    const IsoOptions& options) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
  if (is_complete(g) || g.size() == 0) {
    std::vector<Vertex> id(g.order());
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  const auto lg = canonical_labeling(g, options);
  const auto lh = canonical_labeling(h, options);
  if (lg.form != lh.form) return std::nullopt;
  std::vector<Vertex> inverse_h(h.order());
  for (Vertex v = 0; v < h.order(); ++v) inverse_h[lh.position[v]] = v;
  std::vector<Vertex> map(g.order());
  for (Vertex v = 0; v < g.order(); ++v) map[v] = inverse_h[lg.position[v]];
  return map;
}

bool is_isomorphic(const Graph& g, const Graph& h, const IsoOptions& options) {
  return find_isomorphism(g, h, options).has_value();
}

}  // namespace forestdyn
