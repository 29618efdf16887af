#include "forestdyn/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>

#include "forestdyn/checks.hpp"
#include "forestdyn/corpus.hpp"
#include "forestdyn/dynamics.hpp"
#include "forestdyn/error.hpp"
#include "forestdyn/forest_graph.hpp"
#include "forestdyn/io.hpp"
#include "forestdyn/matrix_tree.hpp"
#include "forestdyn/report.hpp"
#include "forestdyn/roots.hpp"
#include "forestdyn/structure.hpp"
#include "forestdyn/whitney.hpp"

namespace forestdyn {

namespace {

struct Settings {
  std::uint64_t budget = kDefaultForestBudget;
  std::size_t iso_vertices = 12;
  std::size_t max_edges = kDefaultBruteForceEdges;
  std::size_t root_order = 6;
  std::string format = "human";
  std::uint64_t seed = 1;

  bool structured() const { return format == "structured"; }
  bool dot() const { return format == "dot"; }
  IsoOptions iso() const { return IsoOptions{iso_vertices, IsoOptions{}.leaf_budget}; }
  RootSearchOptions roots() const {
    RootSearchOptions o;
    o.max_vertices = root_order;
    o.max_edges = max_edges;
    o.budget = budget;
    o.iso = iso();
    return o;
  }
};

std::size_t parse_number(const std::string& token, const std::string& what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty())
    throw InputError(what + ": expected a non-negative integer, got '" + token + "'");
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

Graph family_graph(const std::string& spec) {
  static const std::regex single(R"(([KCPE])(\d+))");
  static const std::regex bip(R"(K(\d+),(\d+))");
  std::smatch m;
  if (spec == "bowtie") return bowtie();
  if (std::regex_match(spec, m, bip)) return complete_bipartite(std::stoul(m[1]), std::stoul(m[2]));
  if (std::regex_match(spec, m, single)) {
    const std::size_t n = std::stoul(m[2]);
    switch (m[1].str()[0]) {
      case 'K': return complete_graph(n);
      case 'C':
        if (n < 3) throw InputError("cycle needs at least 3 vertices");
        return cycle_graph(n);
      case 'P': return path_graph(n);
      default: return empty_graph(n);
    }
  }
  throw InputError("unknown graph family '" + spec + "'");
}

bool looks_like_family(const std::string& spec) {
  static const std::regex any(R"(bowtie|[KCPE]\d+|K\d+,\d+)");
  return std::regex_match(spec, any);
}

Graph load_graph(const std::string& input) {
  if (input == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_graph(text);
  }
  if (looks_like_family(input)) return family_graph(input);
  if (input.find(';') != std::string::npos || input.find(' ') != std::string::npos) {
    std::string text = input;
    for (char& c : text)
      if (c == ';') c = '\n';
    return parse_graph(text);
  }
  return read_graph_file(input);
}

Vertex resolve_vertex(const Graph& g, const std::string& token) {
  const auto& names = g.vertex_names();
  if (!names.empty()) {
    for (Vertex v = 0; v < names.size(); ++v)
      if (names[v] == token) return v;
    throw InputError("unknown vertex '" + token + "'");
  }
  const std::size_t v = parse_number(token, "vertex");
  if (v >= g.order()) throw InputError("vertex " + token + " out of range");
  return static_cast<Vertex>(v);
}

std::vector<Vertex> resolve_vertices(const Graph& g, const std::string& list) {
  std::vector<Vertex> out;
  for (const auto& t : split(list, ','))
    if (!t.empty()) out.push_back(resolve_vertex(g, t));
  return out;
}

// "#k" picks member k of the enumerated family; otherwise a comma list of
// edge indices or u-v vertex pairs.
EdgeSubset parse_forest(const Graph& g, const std::string& spec, std::uint64_t budget) {
  if (!spec.empty() && spec[0] == '#') {
    const auto family = maximal_forests(g, budget);
    const std::size_t k = parse_number(spec.substr(1), "forest index");
    if (k >= family.size())
      throw InputError("forest index " + std::to_string(k) + " out of range (" +
                       std::to_string(family.size()) + " forests)");
    return family.members[k];
  }
  EdgeSubset s(g.size());
  for (const auto& t : split(spec, ',')) {
    if (t.empty()) continue;
    const auto dash = t.find('-');
    if (dash == std::string::npos) {
      const std::size_t e = parse_number(t, "edge index");
      if (e >= g.size()) throw InputError("edge index " + t + " out of range");
      s.insert(e);
    } else {
      const Vertex a = resolve_vertex(g, t.substr(0, dash));
      const Vertex b = resolve_vertex(g, t.substr(dash + 1));
      const auto e = g.edge_index(a, b);
      if (!e) throw InputError("'" + t + "' is not an edge");
      s.insert(*e);
    }
  }
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string forest_line(const Graph& g, std::size_t i, const EdgeSubset& f) {
  return "#" + std::to_string(i) + " " + format_edge_names(g, f) + "\n";
}

std::string witness_text(const CliqueWitness& w, const Settings& s) {
  if (s.structured()) {
    Json forests = Json::array();
    for (const auto& f : w.forests) forests.push_back(edges_json(w.host, f));
    return dump(Json{{"construction", to_string(w.construction)},
                     {"size", w.size()},
                     {"verified", verify_clique_witness(w)},
                     {"forests", std::move(forests)}});
  }
  std::string out = "clique of size " + std::to_string(w.size()) + " in F(G) (" +
                    to_string(w.construction) + "), " +
                    (verify_clique_witness(w) ? "verified" : "NOT verified") + "\n";
  for (std::size_t i = 0; i < w.forests.size(); ++i) out += forest_line(w.host, i, w.forests[i]);
  return out;
}

std::string graph_text(const Graph& g, const Settings& s, const std::vector<std::string>& labels = {}) {
  if (s.dot()) return write_dot(g, labels);
  if (s.structured()) return dump(graph_json(g));
  return write_edge_list(g);
}

struct Handlers {
  Settings settings;
  std::string input;
  std::string arg1, arg2;
  std::size_t steps = 1;
  std::size_t growth = 0;
  std::string cycle, clique, triangles;
  std::string op, pairs, side;
  std::string vertex, second;
  bool brute = false;
  std::size_t order = 5;
  std::vector<std::string> gen_args;
};

int cmd_forests(Handlers& h, std::ostream& out) {
  const Graph g = load_graph(h.input);
  const ForestFamily family = h.brute ? brute_force_maximal_forests(g, h.settings.max_edges)
                                      : maximal_forests(g, h.settings.budget);
  if (h.settings.structured()) {
    Json forests = Json::array();
    for (const auto& f : family.members) forests.push_back(edges_json(g, f));
    out << dump(Json{{"count", family.size()}, {"forests", std::move(forests)}});
    return kExitOk;
  }
  out << family.size() << " maximal forests\n";
  for (std::size_t i = 0; i < family.size(); ++i) out << forest_line(g, i, family.members[i]);
  return kExitOk;
}

int cmd_count(Handlers& h, std::ostream& out) {
  const Graph g = load_graph(h.input);
  const BigInt c = count_maximal_forests(g);
  if (h.settings.structured())
    out << dump(Json{{"count", to_string(c)}, {"cyclomatic_number", cyclomatic_number(g)}});
  else
    out << to_string(c) << "\n";
  return kExitOk;
}

int cmd_fgraph(Handlers& h, std::ostream& out) {
  const Graph g = load_graph(h.input);
  if (!h.cycle.empty()) {
    out << witness_text(clique_witness_from_cycle(g, cycle_through(g, resolve_vertices(g, h.cycle))), h.settings);
    return kExitOk;
  }
  if (!h.clique.empty()) {
    out << witness_text(clique_witness_from_complete(g, resolve_vertices(g, h.clique)), h.settings);
    return kExitOk;
  }
  if (!h.triangles.empty()) {
    const auto parts = split(h.triangles, ':');
    if (parts.size() != 2) throw InputError("--triangles expects a,b,c:d,e,f");
    const auto t1 = cycle_through(g, resolve_vertices(g, parts[0]));
    const auto t2 = cycle_through(g, resolve_vertices(g, parts[1]));
    const auto w = clique_witness_from_two_triangles(g, t1, t2);
    const bool ok = verify_triangle_product(w);
    if (h.settings.structured()) {
      Json forests = Json::array();
      for (const auto& f : w.forests) forests.push_back(edges_json(g, f));
      out << dump(Json{{"construction", "from-two-triangles"}, {"verified", ok},
                       {"forests", std::move(forests)}, {"nine_cycle", w.nine_cycle}});
    } else {
      out << "9 forests inducing C_3 x C_3 in F(G), " << (ok ? "verified" : "NOT verified") << "\n";
      for (std::size_t i = 0; i < 9; ++i) out << forest_line(g, i, w.forests[i]);
      out << "9-cycle:";
      for (auto i : w.nine_cycle) out << " #" << i;
      out << "\n";
    }
    return kExitOk;
  }
  const ForestGraph fg = build_forest_graph(g, h.settings.budget);
  const auto report = connectivity_report(fg.graph);
  if (h.settings.dot()) {
    std::vector<std::string> labels;
    for (const auto& f : fg.family.members) labels.push_back(format_edge_names(g, f));
    out << write_dot(fg.graph, labels);
  } else if (h.settings.structured()) {
    Json forests = Json::array();
    for (const auto& f : fg.family.members) forests.push_back(edges_json(g, f));
    out << dump(Json{{"summary", connectivity_json(report)}, {"forests", std::move(forests)},
                     {"graph", graph_json(fg.graph)}});
  } else {
    out << "F(G): " << report.vertices << " vertices, " << report.edges << " edges";
    if (report.connected) out << ", connected, diameter " << report.diameter;
    out << "\n" << write_edge_list(fg.graph);
  }
  return kExitOk;
}

int cmd_distance(Handlers& h, std::ostream& out, bool path) {
  const Graph g = load_graph(h.input);
  const MaximalForest f1(g, parse_forest(g, h.arg1, h.settings.budget));
  const MaximalForest f2(g, parse_forest(g, h.arg2, h.settings.budget));
  if (!path) {
    const std::size_t d = forest_distance(f1, f2);
    if (h.settings.structured())
      out << dump(Json{{"distance", d}});
    else
      out << d << "\n";
    return kExitOk;
  }
  const auto walk = exchange_path(g, f1, f2);
  if (h.settings.structured()) {
    Json steps = Json::array();
    for (const auto& f : walk) steps.push_back(edges_json(g, f.edges()));
    out << dump(Json{{"length", walk.size() - 1}, {"path", std::move(steps)}});
    return kExitOk;
  }
  out << "length " << walk.size() - 1 << "\n";
  for (std::size_t i = 0; i < walk.size(); ++i) out << forest_line(g, i, walk[i].edges());
  return kExitOk;
}

int cmd_iterate(Handlers& h, std::ostream& out) {
  Graph current = load_graph(h.input);
  std::vector<std::pair<std::size_t, std::size_t>> sizes{{current.order(), current.size()}};
  for (std::size_t step = 0; step < h.steps; ++step) {
    require_forest_budget(current, h.settings.budget, step);
    current = build_forest_graph(current, h.settings.budget).graph;
    sizes.emplace_back(current.order(), current.size());
  }
  if (h.settings.dot()) {
    out << write_dot(current);
  } else if (h.settings.structured()) {
    Json steps = Json::array();
    for (std::size_t k = 0; k < sizes.size(); ++k)
      steps.push_back({{"k", k}, {"vertices", sizes[k].first}, {"edges", sizes[k].second}});
    out << dump(Json{{"steps", std::move(steps)}, {"graph", graph_json(current)}, {"shape", describe(current)}});
  } else {
    for (std::size_t k = 0; k < sizes.size(); ++k)
      out << "F^" << k << ": " << sizes[k].first << " vertices, " << sizes[k].second << " edges\n";
    out << "result: " << describe(current) << "\n";
  }
  return kExitOk;
}

int cmd_classify(Handlers& h, std::ostream& out) {
  const Graph g = load_graph(h.input);
  const Verdict v = classify(g);
  std::optional<GrowthReport> growth;
  if (h.growth > 0 && v.status == Convergence::Divergent)
    growth = verify_clique_growth(g, h.growth, h.settings.budget);
  if (h.settings.structured()) {
    Json j = verdict_json(g, v);
    if (growth) j["growth"] = growth_json(*growth);
    out << dump(j);
  } else {
    out << verdict_human(g, v);
    if (growth) out << growth_human(*growth);
  }
  if (growth)
    for (const auto& s : growth->steps)
      if (!s.verified) return kExitCheckFailed;
  return kExitOk;
}

int cmd_stable(Handlers& h, std::ostream& out) {
  const Graph g = load_graph(h.input);
  const bool stable = is_stable(g, h.settings.budget, h.settings.iso());
  if (h.settings.structured())
    out << dump(Json{{"stable", stable}});
  else
    out << (stable ? "stable" : "not stable") << "\n";
  return kExitOk;
}

int cmd_roots(Handlers& h, std::ostream& out, bool depth_only) {
  const Graph g = load_graph(h.input);
  const auto options = h.settings.roots();
  const DepthReport d = depth_lower_bound(g, options);
  if (depth_only) {
    out << (h.settings.structured() ? dump(depth_json(g, d)) : depth_human(d));
    return kExitOk;
  }
  const RootSearchResult r = find_roots(g, options);
  out << (h.settings.structured() ? dump(root_search_json(g, r, d)) : roots_human(r, d));
  return kExitOk;
}

int cmd_whitney(Handlers& h, std::ostream& out) {
  const Graph g = load_graph(h.input);
  WhitneyResult r;
  if (h.op == "identify") {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& p : split(h.pairs, ',')) {
      const auto ab = split(p, ':');
      if (ab.size() != 2) throw InputError("--pairs expects a:b,c:d");
      pairs.emplace_back(resolve_vertex(g, ab[0]), resolve_vertex(g, ab[1]));
    }
    r = whitney_identify(g, pairs);
  } else if (h.op == "split") {
    r = whitney_split(g, resolve_vertex(g, h.vertex), resolve_vertices(g, h.side));
  } else if (h.op == "twist") {
    r = whitney_twist(g, resolve_vertex(g, h.vertex), resolve_vertex(g, h.second),
                      resolve_vertices(g, h.side));
  } else {
    throw InputError("--op must be identify, split or twist");
  }
  const bool same = same_forest_family(g, r.graph, r.edge_map, h.settings.budget);
  if (h.settings.structured()) {
    out << dump(Json{{"graph", graph_json(r.graph)}, {"edge_map", r.edge_map},
                     {"forest_family_preserved", same}});
  } else if (h.settings.dot()) {
    out << write_dot(r.graph);
  } else {
    out << write_edge_list(r.graph) << "forest family preserved: " << (same ? "yes" : "no") << "\n";
  }
  return same ? kExitOk : kExitCheckFailed;
}

int cmd_verify(Handlers& h, std::ostream& out) {
  CheckOptions options;
  options.seed = h.settings.seed;
  options.budget = h.settings.budget;
  options.corpus_order = h.order;
  const auto results = run_checks(options);
  bool all = true;
  Json rows = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    rows.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (h.settings.structured()) {
    out << dump(Json{{"passed", all}, {"checks", std::move(rows)}});
  } else {
    for (const auto& r : results)
      out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
    if (!all) {
      out << "failed:";
      for (const auto& r : results)
        if (!r.passed) out << " [" << r.name << "]";
      out << "\n";
    }
  }
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_gen(Handlers& h, std::ostream& out) {
  if (h.gen_args.empty()) throw InputError("gen needs a family");
  const std::string& kind = h.gen_args[0];
  const auto arg = [&](std::size_t i) {
    if (i >= h.gen_args.size()) throw InputError("gen " + kind + ": missing argument");
    return h.gen_args[i];
  };
  if (kind == "corpus") {
    const auto graphs = enumerate_graphs(parse_number(arg(1), "order"));
    if (h.settings.structured()) {
      Json all = Json::array();
      for (const auto& g : graphs) all.push_back(graph_json(g));
      out << dump(all);
    } else {
      for (std::size_t i = 0; i < graphs.size(); ++i)
        out << "# graph " << i << "\n" << write_edge_list(graphs[i]) << "\n";
    }
    return kExitOk;
  }
  if (kind == "random") {
    const std::size_t n = parse_number(arg(1), "order");
    const double p = std::stod(arg(2));
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("gen random: probability must lie in [0, 1]");
    out << graph_text(random_graph(n, p, h.settings.seed), h.settings);
    return kExitOk;
  }
  std::string spec = kind;
  for (std::size_t i = 1; i < h.gen_args.size(); ++i) spec += (i == 2 ? "," : "") + h.gen_args[i];
  out << graph_text(family_graph(spec), h.settings);
  return kExitOk;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Handlers h;
  CLI::App app{"Maximal forests, the forest graph operator F and its dynamics", "forestdyn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--budget", h.settings.budget, "Largest forest count any single step may enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-vertices", h.settings.iso_vertices, "Order limit for generic isomorphism tests")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-edges", h.settings.max_edges, "Edge limit for brute force and root candidates")
      ->check(CLI::PositiveNumber);
  app.add_option("--root-order", h.settings.root_order, "Vertex limit for root candidates (at most 7)")
      ->check(CLI::Range(1, 7));
  app.add_option("--format", h.settings.format, "Output format")
      ->check(CLI::IsMember({"human", "structured", "dot"}));
  app.add_option("--seed", h.settings.seed, "Seed for randomized checks and generators");

  const auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", h.input, "Graph file, family or inline edges")->required(); };

  auto* forests = app.add_subcommand("forests", "List the maximal forests");
  graph_arg(forests);
  forests->add_flag("--brute-force", h.brute, "Enumerate by testing every edge subset");
  auto* count = app.add_subcommand("count", "Count maximal forests (matrix-tree)");
  graph_arg(count);
  auto* fgraph = app.add_subcommand("fgraph", "Build F(G), or a clique witness in it");
  graph_arg(fgraph);
  fgraph->add_option("--cycle", h.cycle, "Vertices of a cycle: K_n witness from it");
  fgraph->add_option("--clique", h.clique, "Vertices of a clique: path construction");
  fgraph->add_option("--triangles", h.triangles, "Two edge-disjoint triangles a,b,c:d,e,f");
  auto* distance = app.add_subcommand("distance", "Distance between two maximal forests");
  auto* path = app.add_subcommand("path", "Exchange path between two maximal forests");
  for (auto* sub : {distance, path}) {
    graph_arg(sub);
    sub->add_option("first", h.arg1, "Forest: #k or edge list")->required();
    sub->add_option("second", h.arg2, "Forest: #k or edge list")->required();
  }
  auto* iterate = app.add_subcommand("iterate", "Apply F repeatedly");
  graph_arg(iterate);
  iterate->add_option("steps", h.steps, "Number of applications")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Convergent or divergent under F");
  graph_arg(classify_cmd);
  classify_cmd->add_option("--growth", h.growth, "Also verify clique growth up to F^m");
  auto* stable = app.add_subcommand("stable", "Whether F(G) is isomorphic to G");
  graph_arg(stable);
  auto* roots = app.add_subcommand("roots", "Search for graphs H with F(H) isomorphic to G");
  graph_arg(roots);
  auto* depth = app.add_subcommand("depth", "Lower bound on the F-depth");
  graph_arg(depth);
  auto* whitney = app.add_subcommand("whitney", "Apply a Whitney 2-operation");
  graph_arg(whitney);
  whitney->add_option("--op", h.op, "identify, split or twist")->required();
  whitney->add_option("--pairs", h.pairs, "identify: a:b,c:d");
  whitney->add_option("--vertex,-u", h.vertex, "split: cut vertex; twist: first vertex");
  whitney->add_option("-v", h.second, "twist: second vertex");
  whitney->add_option("--side", h.side, "split/twist: vertex list of the moved side");
  auto* verify = app.add_subcommand("verify", "Run the structural check suite");
  verify->add_option("--order", h.order, "Exhaustive scans cover graphs up to this order")
      ->check(CLI::Range(1, 7));
  auto* gen = app.add_subcommand("gen", "Print a graph: K 5, C 4, P 3, E 2, K 3 3, bowtie, corpus N, random N P");
  gen->add_option("family", h.gen_args, "Family and parameters")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitBadInput, out.str(), err.str()};
  }

  int status = kExitOk;
  try {
    if (*forests) status = cmd_forests(h, out);
    else if (*count) status = cmd_count(h, out);
    else if (*fgraph) status = cmd_fgraph(h, out);
    else if (*distance) status = cmd_distance(h, out, false);
    else if (*path) status = cmd_distance(h, out, true);
    else if (*iterate) status = cmd_iterate(h, out);
    else if (*classify_cmd) status = cmd_classify(h, out);
    else if (*stable) status = cmd_stable(h, out);
    else if (*roots) status = cmd_roots(h, out, false);
    else if (*depth) status = cmd_roots(h, out, true);
    else if (*whitney) status = cmd_whitney(h, out);
    else if (*verify) status = cmd_verify(h, out);
    else if (*gen) status = cmd_gen(h, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    status = kExitBadInput;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    status = kExitBadInput;
  } catch (const ResourceError& e) {
    if (h.settings.structured())
      out << dump(resource_error_json(e));
    err << "budget exceeded: " << e.what();
    if (e.count()) err << " (" << (e.count_is_exact() ? "exact count " : "at least ") << to_string(*e.count()) << ")";
    err << "\n";
    status = kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    status = kExitInternal;
  }
  return {status, out.str(), err.str()};
}

}  // namespace forestdyn
