#include <doctest.h>

#include <nlohmann/json.hpp>

#include "forestdyn/cli.hpp"

using forestdyn::run_cli;

namespace {

forestdyn::CliResult run(std::initializer_list<std::string> args) { return run_cli(std::vector<std::string>(args)); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("golden lines") {
    CHECK(run({"count", "K5"}).out == "125\n");
    const auto c = run({"classify", "bowtie"});
    CHECK(c.status == 0);
    CHECK(c.out.find("Divergent; witness: two edge-disjoint triangles") != std::string::npos);
    CHECK(run({"roots", "K4"}).out.find("1 root: C_4; depth ≥ 1; chain stops (bipartite)") != std::string::npos);
    CHECK(run({"count", "0 1;1 2;2 0;2 3;3 4;4 2"}).out == "9\n");
  }

  TEST_CASE("error statuses") {
    const auto loop = run({"count", "2 2"});
    CHECK(loop.status == forestdyn::kExitBadInput);
    CHECK_FALSE(loop.err.empty());
    const auto blow = run({"iterate", "C4", "3"});
    CHECK(blow.status == forestdyn::kExitBudget);
    CHECK(blow.err.find("223304744960") != std::string::npos);
    CHECK(run({"fgraph", "K4", "--cycle", "0,1,2,0"}).status == forestdyn::kExitBadInput);
    CHECK(run({"fgraph", "P4", "--cycle", "0,1,2,3"}).status == forestdyn::kExitBadInput);
    CHECK(run({"nonsense"}).status == forestdyn::kExitBadInput);
    CHECK(run({"count", "/no/such/file.txt"}).status == forestdyn::kExitBadInput);
  }

  TEST_CASE("structured output parses") {
    const auto r = run({"--format", "structured", "classify", "C5", "--growth", "2"});
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("status"));
    const auto s = run({"--format", "structured", "count", "K4"});
    CHECK_NOTHROW((void)nlohmann::json::parse(s.out));
  }

  TEST_CASE("dot output") {
    const auto r = run({"--format", "dot", "fgraph", "C4"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("graph", 0) == 0);
  }

  TEST_CASE("forest specs and paths") {
    CHECK(run({"distance", "K4", "0-1,0-2,0-3", "0-1,1-2,2-3"}).out == "2\n");
    CHECK(run({"distance", "K4", "#0", "#0"}).out == "0\n");
    CHECK(run({"path", "K4", "0-1,0-2,0-3", "0-1,1-2,2-3"}).status == 0);
    CHECK(run({"distance", "K4", "0-1,1-2,2-0", "#0"}).status == forestdyn::kExitBadInput);
  }

  TEST_CASE("whitney and generators") {
    CHECK(run({"whitney", "C6", "--op", "twist", "-u", "0", "-v", "3", "--side", "0,1,2,3"}).status == 0);
    CHECK(run({"whitney", "C4", "--op", "split", "--vertex", "0", "--side", "1"}).status == forestdyn::kExitBadInput);
    CHECK(run({"gen", "corpus", "3"}).status == 0);
    const auto a = run({"gen", "random", "6", "0.5", "--seed", "9"});
    const auto b = run({"gen", "random", "6", "0.5", "--seed", "9"});
    CHECK(a.out == b.out);
  }

  TEST_CASE("stable and depth") {
    CHECK(run({"stable", "K3"}).status == 0);
    CHECK(run({"stable", "K4"}).out == "not stable\n");
    CHECK(run({"depth", "C4"}).out.find("0") != std::string::npos);
  }

  TEST_CASE("byte-identical reruns") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"forests", "bowtie"}, {"fgraph", "K4"}, {"--format", "structured", "roots", "K4"}, {"iterate", "C4", "2"}}) {
      const auto first = run_cli(args);
      const auto second = run_cli(args);
      CHECK(first.out == second.out);
      CHECK(first.err == second.err);
      CHECK(first.status == second.status);
    }
  }
}
