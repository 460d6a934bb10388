#include <stdexcept>

#include "doctest.h"
#include "support/testgraphs.hpp"
#include "zsflow/oracle.hpp"
#include "zsflow/solver.hpp"

using namespace zsflow;
using namespace zsflow::testing;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("the triangle admits no zero-sum flow at all") {
  // The three vertex constraints force every edge value to 0.
  auto outcome = brute_force_flow(cycle_graph(3), 6);
  CHECK_FALSE(outcome.found());
  CHECK(outcome.exhaustive_none());
}

TEST_CASE("C4 has a zero-sum 2-flow") {
  Multigraph g = cycle_graph(4);
  auto outcome = brute_force_flow(g, 2);
  REQUIRE(outcome.found());
  CHECK(verify(g, *outcome.labeling, 2).ok);
}

TEST_CASE("K4 has a zero-sum 3-flow") {
  Multigraph g = complete_graph(4);
  auto outcome = brute_force_flow(g, 3);
  REQUIRE(outcome.found());
  CHECK(verify(g, *outcome.labeling, 3).ok);
}

TEST_CASE("found labelings always pass verify with the same k") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Multigraph g = gen_connected_5regular(4, seed);
    auto outcome = brute_force_flow(g, 6);
    REQUIRE(outcome.found());
    CHECK(verify(g, *outcome.labeling, 6).ok);
  }
}

TEST_CASE("a tiny budget reports exhaustion rather than none") {
  auto outcome = brute_force_flow(complete_graph(6), 6, 3);
  CHECK_FALSE(outcome.found());
  CHECK(outcome.budget_exhausted);
  CHECK_FALSE(outcome.exhaustive_none());
}

TEST_CASE("oracle is deterministic") {
  Multigraph g = gen_connected_5regular(6, 42);
  auto a = brute_force_flow(g, 6);
  auto b = brute_force_flow(g, 6);
  REQUIRE(a.found());
  REQUIRE(b.found());
  CHECK(a.labeling->values == b.labeling->values);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("k below 2 is rejected") {
  CHECK_THROWS_AS(brute_force_flow(cycle_graph(4), 1), std::invalid_argument);
}

TEST_SUITE_END();
