#include "forestdyn/structure.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "forestdyn/error.hpp"

namespace forestdyn {

std::vector<std::size_t> component_labels(const Graph& g) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.order(), unset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (label[inc.neighbor] == unset) {
          label[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const auto label = component_labels(g);
  std::size_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  std::vector<std::vector<Vertex>> blocks(count);
  for (Vertex v = 0; v < g.order(); ++v) blocks[label[v]].push_back(v);
  return blocks;
}

std::vector<std::vector<Vertex>> components_avoiding(const Graph& g,
                                                     std::span<const Vertex> removed) {
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : removed)
    if (v < g.order()) gone[v] = 1;
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (gone[s] || seen[s]) continue;
    auto& block = blocks.emplace_back();
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      block.push_back(x);
      for (const auto& inc : g.incident(x))
        if (!gone[inc.neighbor] && !seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          stack.push_back(inc.neighbor);
        }
    }
    std::sort(block.begin(), block.end());
  }
  return blocks;
}

std::size_t component_count(const Graph& g) {
  std::size_t count = 0;
  for (auto l : component_labels(g)) count = std::max(count, l + 1);
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::size_t cyclomatic_number(const Graph& g) {
  return g.size() + component_count(g) - g.order();
}

EdgeSubset bridges(const Graph& g) {
  const std::size_t n = g.order();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, unset), low(n, 0);
  EdgeSubset out(g.size());

  struct Frame {
    Vertex v;
    EdgeIndex parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::size_t timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != unset) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, g.size(), 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const Incidence step = inc[f.next++];
        if (step.edge == f.parent_edge) continue;
        if (disc[step.neighbor] == unset) {
          disc[step.neighbor] = low[step.neighbor] = timer++;
          stack.push_back({step.neighbor, step.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[step.neighbor]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const Vertex parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > disc[parent]) out.insert(done.parent_edge);
      }
    }
  }
  return out;
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

std::optional<Cycle> unique_cycle(const Graph& g) {
  if (cyclomatic_number(g) != 1) return std::nullopt;
  const EdgeSubset cut = bridges(g);
  // The non-bridge edges are exactly the cycle.
  std::vector<std::vector<Vertex>> nbr(g.order());
  Vertex start = static_cast<Vertex>(g.order());
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    if (cut.contains(e)) continue;
    const Edge& ed = g.edge(e);
    nbr[ed.u].push_back(ed.v);
    nbr[ed.v].push_back(ed.u);
    start = std::min(start, ed.u);
  }
  std::vector<Vertex> walk{start};
  Vertex prev = start;
  Vertex cur = std::min(nbr[start][0], nbr[start][1]);
  while (cur != start) {
    walk.push_back(cur);
    const Vertex nxt = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    prev = cur;
    cur = nxt;
  }
  return cycle_through(g, walk);
}

bool for_each_cycle(const Graph& g, const std::function<bool(const Cycle&)>& visit) {
  const std::size_t n = g.order();
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::vector<EdgeIndex> path_edges;
  bool stopped = false;

  // Explicit stack of (vertex, next incidence position).
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex s = 0; s < n && !stopped; ++s) {
    std::vector<Frame> stack{{s, 0}};
    path.assign(1, s);
    path_edges.clear();
    on_path[s] = 1;
    while (!stack.empty() && !stopped) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next == inc.size()) {
        on_path[f.v] = 0;
        stack.pop_back();
        path.pop_back();
        if (!path_edges.empty()) path_edges.pop_back();
        continue;
      }
      const Incidence step = inc[f.next++];
      const Vertex w = step.neighbor;
      if (w == s) {
        // Close up; keep one orientation per cycle.
        if (path.size() >= 3 && path[1] < path.back()) {
          Cycle c;
          c.vertices = path;
          c.edges = path_edges;
          c.edges.push_back(step.edge);
          if (!visit(c)) stopped = true;
        }
        continue;
      }
      if (w < s || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      path_edges.push_back(step.edge);
      stack.push_back({w, 0});
    }
    for (Vertex v : path) on_path[v] = 0;
  }
  return !stopped;
}

CycleList enumerate_cycles(const Graph& g, std::size_t limit) {
  CycleList out;
  if (limit == 0) {
    out.truncated = cyclomatic_number(g) > 0;
    return out;
  }
  for_each_cycle(g, [&](const Cycle& c) {
    if (out.cycles.size() == limit) {
      out.truncated = true;
      return false;
    }
    out.cycles.push_back(c);
    return true;
  });
  return out;
}

BipartiteResult is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint8_t unset = 2;
  BipartiteResult r;
  std::vector<std::uint8_t> color(n, unset);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != unset) continue;
    color[root] = 0;
    parent[root] = root;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (const auto& inc : g.incident(v)) {
        const Vertex w = inc.neighbor;
        if (color[w] == unset) {
          color[w] = static_cast<std::uint8_t>(1 - color[v]);
          parent[w] = v;
          depth[w] = depth[v] + 1;
          q.push(w);
        } else if (color[w] == color[v]) {
          // Odd cycle: v .. lca .. w through the BFS tree, closed by vw.
          std::vector<Vertex> left{v}, right{w};
          Vertex a = v, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::vector<Vertex> walk = left;
          walk.insert(walk.end(), right.rbegin(), right.rend());
          r.bipartite = false;
          r.odd_cycle = cycle_through(g, walk);
          return r;
        }
      }
    }
  }
  r.bipartite = true;
  r.coloring = std::move(color);
  return r;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  }
  return true;
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : n_(g.order()), words_((n_ + 63) / 64) {
    adj_.assign(n_, std::vector<std::uint64_t>(words_, 0));
    for (const Edge& e : g.edges()) {
      adj_[e.u][e.v >> 6] |= std::uint64_t{1} << (e.v & 63);
      adj_[e.v][e.u >> 6] |= std::uint64_t{1} << (e.u & 63);
    }
  }

  std::vector<Vertex> run(const Graph& g) {
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<Vertex> current;
    expand(current, order);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  bool adjacent(Vertex a, Vertex b) const { return (adj_[a][b >> 6] >> (b & 63)) & 1U; }

  // Greedy sequential colouring; returns candidates sorted by colour with
  // the colour number of each.
  void colour_sort(const std::vector<Vertex>& cand, std::vector<Vertex>& order,
                   std::vector<std::size_t>& colour) const {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : cand) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool clash = false;
        for (Vertex w : classes[k])
          if (adjacent(v, w)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    order.clear();
    colour.clear();
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (Vertex v : classes[k]) {
        order.push_back(v);
        colour.push_back(k + 1);
      }
  }

  void expand(std::vector<Vertex>& current, std::vector<Vertex> cand) {
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    colour_sort(cand, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      std::vector<Vertex> next;
      for (std::size_t j = 0; j < i; ++j)
        if (adjacent(v, order[j])) next.push_back(order[j]);
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> adj_;
  std::vector<Vertex> best_;
};

}  // namespace

std::vector<Vertex> max_clique(const Graph& g, std::size_t vertex_limit) {
  if (g.order() > vertex_limit)
    throw ResourceError("max_clique: " + std::to_string(g.order()) + " vertices exceeds limit " +
                            std::to_string(vertex_limit) +
                            "; use clique_witness_from_cycle for constructive witnesses",
                        BigInt(g.order()));
  if (g.order() == 0) return {};
  CliqueSearch search(g);
  return search.run(g);
}

namespace {

class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.order()), budget_(budget), visited_(n_, 0), avail_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) avail_[v] = g.degree(v);
  }

  std::optional<std::vector<Vertex>> run() {
    path_.push_back(0);
    visited_[0] = 1;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  // avail_[w] counts neighbours of w that are unvisited or a path endpoint.
  bool extend() {
    if (++nodes_ > budget_)
      throw ResourceError("hamiltonian_cycle: search budget of " + std::to_string(budget_) +
                          " nodes exhausted");
    const Vertex end = path_.back();
    if (path_.size() == n_) return g_.adjacent(end, 0);

    std::vector<Vertex> next;
    for (const auto& inc : g_.incident(end))
      if (!visited_[inc.neighbor]) next.push_back(inc.neighbor);
    // Fewest onward options first.
    std::stable_sort(next.begin(), next.end(),
                     [&](Vertex a, Vertex b) { return avail_[a] < avail_[b]; });

    for (Vertex x : next) {
      visited_[x] = 1;
      path_.push_back(x);
      // `end` stops being an endpoint unless it is the start.
      bool ok = true;
      if (end != 0) {
        for (const auto& inc : g_.incident(end)) {
          --avail_[inc.neighbor];
          const Vertex w = inc.neighbor;
          if (!visited_[w] && avail_[w] < 2) ok = false;
        }
      }
      // Only the start can close the cycle; it must keep one way back.
      if (ok && path_.size() < n_) {
        bool start_open = false;
        for (const auto& inc : g_.incident(0))
          if (!visited_[inc.neighbor]) {
            start_open = true;
            break;
          }
        ok = start_open;
      }
      if (ok && extend()) return true;
      if (end != 0)
        for (const auto& inc : g_.incident(end)) ++avail_[inc.neighbor];
      path_.pop_back();
      visited_[x] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<char> visited_;
  std::vector<std::size_t> avail_;
  std::vector<Vertex> path_;
};

}  // namespace

HamiltonResult hamiltonian_cycle(const Graph& g, std::uint64_t node_budget) {
  HamiltonResult r;
  if (g.order() < 3 || !is_connected(g)) return r;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < 2) return r;
  HamiltonSearch search(g, node_budget);
  if (auto walk = search.run()) {
    r.status = HamiltonStatus::Found;
    r.cycle = cycle_through(g, *walk);
  }
  return r;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t hn = h.order();
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (const Edge& x : h.edges()) e.emplace_back(i * hn + x.u, i * hn + x.v);
  for (const Edge& x : g.edges())
    for (std::size_t j = 0; j < hn; ++j) e.emplace_back(x.u * hn + j, x.v * hn + j);
  return build_graph(g.order() * hn, e);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::size_t> pos(g.order(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (const Edge& x : g.edges())
    if (pos[x.u] != std::numeric_limits<std::size_t>::max() &&
        pos[x.v] != std::numeric_limits<std::size_t>::max())
      e.emplace_back(pos[x.u], pos[x.v]);
  return build_graph(vertices.size(), e);
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), std::numeric_limits<std::size_t>::max());
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (const auto& inc : g.incident(v))
      if (dist[inc.neighbor] == std::numeric_limits<std::size_t>::max()) {
        dist[inc.neighbor] = dist[v] + 1;
        q.push(inc.neighbor);
      }
  }
  return dist;
}

}  // namespace forestdyn
