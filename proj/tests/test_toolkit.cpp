#include "doctest.h"
#include "support/testgraphs.hpp"
#include "zsflow/generator.hpp"
#include "zsflow/graph_io.hpp"
#include "zsflow/solver.hpp"

using namespace zsflow;
using namespace zsflow::testing;

TEST_SUITE_BEGIN("toolkit");

TEST_CASE("n = 2 necessarily generates the dumbbell") {
  GeneratorConfig cfg{2, 9, 1000};
  Multigraph g = gen_random_5regular(cfg);
  CHECK(g.vertex_count() == 2);
  REQUIRE(g.edge_count() == 5);
  for (EdgeId e = 0; e < 5; ++e) {
    CHECK(g.edge(e).a == 0);
    CHECK(g.edge(e).b == 1);
  }
}

TEST_CASE("generated graphs are 5-regular, loopless and per-seed deterministic") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GeneratorConfig cfg{10, seed, 1000};
    Multigraph g = gen_random_5regular(cfg);
    CHECK(is_regular(g, 5));
    CHECK_FALSE(g.has_loop());
    Multigraph again = gen_random_5regular(cfg);
    CHECK(serialize_graph(g) == serialize_graph(again));
  }
}

TEST_CASE("odd vertex counts are rejected") {
  GeneratorConfig cfg{3, 1, 1000};
  CHECK_THROWS_AS(gen_random_5regular(cfg), std::invalid_argument);
}

TEST_CASE("graph round-trip and normalization") {
  std::string text = "zs 2 5\n0 1\n0 1\n0 1\n0 1\n0 1\n";
  Multigraph g = parse_graph(text);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 5);
  CHECK(serialize_graph(g) == text);

  std::string commented = "# a dumbbell\nzs 2 5\n0 1\n 0 1\n0 1\n\n0 1\n0 1\n";
  CHECK(serialize_graph(parse_graph(commented)) == text);
}

TEST_CASE("graph parser rejects malformed input") {
  CHECK_THROWS_AS(parse_graph(""), FormatError);
  CHECK_THROWS_AS(parse_graph("graph 2 1\n0 1\n"), FormatError);
  CHECK_THROWS_AS(parse_graph("zs 2\n"), FormatError);
  CHECK_THROWS_AS(parse_graph("zs 2 1\n0 3\n"), FormatError);
  CHECK_THROWS_AS(parse_graph("zs 4 1\n3 3\n"), FormatError);  // loop
  CHECK_THROWS_AS(parse_graph("zs 2 2\n0 1\n"), FormatError);  // count mismatch
  CHECK_THROWS_AS(parse_graph("zs 2 1\n0 1 junk\n"), FormatError);
}

TEST_CASE("flow round-trip") {
  FlowCertificate cert = solve(dumbbell());
  std::string text = serialize_flow(cert);
  ParsedFlow back = parse_flow(text, 5);
  CHECK(back.k == 6);
  CHECK(back.branch == "two-factor");
  CHECK(back.labeling.values == cert.labeling.values);
}

TEST_CASE("flow parser rejects bad input") {
  CHECK_THROWS_AS(parse_flow("flow 6 two-factor\n3\n3\n", 5), FormatError);  // short file
  CHECK_THROWS_AS(parse_flow("flow 6 two-factor\n0\n", 1), FormatError);    // zero value
  CHECK_THROWS_AS(parse_flow("flows 6 x\n", -1), FormatError);
  CHECK_THROWS_AS(parse_flow("flow 1 x\n", -1), FormatError);
}

TEST_SUITE_END();
