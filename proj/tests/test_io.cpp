#include <doctest.h>

#include "forestdyn/error.hpp"
#include "forestdyn/io.hpp"
#include "forestdyn/isomorphism.hpp"

using namespace forestdyn;

TEST_SUITE("io") {
  TEST_CASE("numeric edge lists") {
    const Graph g = parse_edge_list("# triangle\n0 1\n1 2\n\n2 0\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 3);
    CHECK(g.vertex_names().empty());
    const Graph h = parse_edge_list("vertices 5\n0 1\n");
    CHECK(h.order() == 5);
  }

  TEST_CASE("named vertices keep first-seen order") {
    const Graph g = parse_edge_list("b a\na c\n");
    CHECK(g.order() == 3);
    CHECK(g.name_of(0) == "b");
    CHECK(g.name_of(2) == "c");
    CHECK(g.adjacent(0, 1));
  }

  TEST_CASE("parse errors carry line and column") {
    try {
      parse_edge_list("0 1\n1 2\n  3 3\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() >= 3);
    }
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("vertices 2\n0 5\n"), ParseError);
  }

  TEST_CASE("DOT subset") {
    const Graph g = parse_dot("strict graph G {\n node [shape=circle];\n a -- b -- c; // chain\n c -- a [w=2]\n d;\n}\n");
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.name_of(3) == "d");
    CHECK_THROWS_AS(parse_dot("digraph { a -> b }"), ParseError);
    CHECK_THROWS_AS(parse_dot("graph { a -- }"), ParseError);
    CHECK_THROWS_AS(parse_dot("graph { a -- a }"), ParseError);
    CHECK(parse_graph("graph { x -- y }").size() == 1);
    CHECK(parse_graph("x y\n").size() == 1);
  }

  TEST_CASE("round trips") {
    const Graph g = with_names(complete_graph(4), {"p", "q", "r", "s"});
    const Graph back = parse_edge_list(write_edge_list(g));
    CHECK(back == g);
    CHECK(back.vertex_names() == g.vertex_names());
    const Graph dot = parse_dot(write_dot(cycle_graph(5)));
    CHECK(is_isomorphic(dot, cycle_graph(5)));
    const Graph isolated = parse_edge_list(write_edge_list(empty_graph(3)));
    CHECK(isolated.order() == 3);
  }

  TEST_CASE("formatting") {
    const Graph g = with_names(path_graph(3), {"a", "b", "c"});
    EdgeSubset s = EdgeSubset::full(2);
    CHECK(format_edge_names(g, s) == "{a-b, b-c}");
    CHECK(format_edge_indices(s) == "0 1");
  }

  TEST_CASE("missing file") { CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), InputError); }
}
