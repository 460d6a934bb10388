#include <set>

#include "doctest.h"
#include "support/testgraphs.hpp"
#include "zsflow/cycle_cubic.hpp"
#include "zsflow/solver.hpp"

using namespace zsflow;
using namespace zsflow::testing;

TEST_SUITE_BEGIN("cycle-cubic");

TEST_CASE("assemble two triangles over their joining edge") {
  Multigraph g = bowtie_bridge();
  auto h = classify_components(g, {0, 1, 2, 3, 4, 5});
  TJoinResult join;
  join.terminals = {0, 1};
  join.join_edges = {0};
  join.lifted_edges = {6};
  auto trees = assemble(g, h, join);
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].members.size() == 2);
  CHECK(trees[0].members[0].kind == MemberKind::OddCycle);
  CHECK(trees[0].members[1].kind == MemberKind::OddCycle);
  CHECK(trees[0].connector_edges == std::vector<EdgeId>{6});
}

TEST_CASE("assemble emits untouched components as singleton trees") {
  Multigraph g = cycle_graph(6);
  auto h = classify_components(g, {0, 1, 2, 3, 4, 5});
  auto trees = assemble(g, h, TJoinResult{});
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].members.size() == 1);
  CHECK(trees[0].members[0].kind == MemberKind::EvenCycle);
  CHECK(trees[0].connector_edges.empty());
}

TEST_CASE("assemble a path of triangle - K4 - triangle") {
  // Triangles 0,1,2 and 7,8,9 hooked to different K4 vertices.
  Multigraph g(10, {{0, 1}, {1, 2}, {0, 2},                          // triangle A
                    {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6},  // K4
                    {7, 8}, {8, 9}, {7, 9},                          // triangle B
                    {2, 3}, {6, 7}});                                // connectors
  auto h = classify_components(g, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  TJoinResult join;
  join.lifted_edges = {12, 13};
  auto trees = assemble(g, h, join);
  REQUIRE(trees.size() == 1);
  const auto& t = trees[0];
  REQUIRE(t.members.size() == 3);
  CHECK(t.members[1].kind == MemberKind::Cubic);
  int cubic_degree = 0;
  for (auto [a, b] : t.quotient_tree) cubic_degree += (a == 1) + (b == 1);
  CHECK(cubic_degree == 2);
  CHECK(validate(g, t).ok);
}

TEST_CASE("validate accepts the bowtie tree and reports parity violations") {
  Multigraph g = bowtie_bridge();
  CycleCubicTree t;
  t.members = {{{0, 1, 2}, MemberKind::OddCycle}, {{3, 4, 5}, MemberKind::OddCycle}};
  t.internal_edges = {0, 1, 2, 3, 4, 5};
  t.connector_edges = {6};
  t.quotient_tree = {{0, 1}};
  CHECK(validate(g, t).ok);

  // Mislabel one triangle as an even cycle: clause (c) must fire (after the
  // shape check, so use a genuinely even cycle instead).
  Multigraph g2(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}, {2, 3}});
  CycleCubicTree bad;
  bad.members = {{{0, 1, 2}, MemberKind::OddCycle}, {{3, 4, 5, 6}, MemberKind::EvenCycle}};
  bad.internal_edges = {0, 1, 2, 3, 4, 5, 6};
  bad.connector_edges = {7};
  bad.quotient_tree = {{0, 1}};
  auto report = validate(g2, bad);
  CHECK_FALSE(report.ok);
  CHECK(report.violation.find("(c)") != std::string::npos);
}

TEST_CASE("validate reports non-spanning members") {
  Multigraph g = bowtie_bridge();
  CycleCubicTree t;
  t.members = {{{0, 1, 2}, MemberKind::OddCycle}, {{3, 4}, MemberKind::OddCycle}};
  t.internal_edges = {0, 1, 2, 3, 4, 5};
  t.connector_edges = {6};
  t.quotient_tree = {{0, 1}};
  auto report = validate(g, t);
  CHECK_FALSE(report.ok);
  CHECK(report.violation.find("(a)") != std::string::npos);
}

TEST_CASE("validate rejects a cyclic contraction") {
  // Two triangles joined by two connector edges form a 2-cycle after
  // contraction, not a tree.
  Multigraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {2, 5}});
  CycleCubicTree t;
  t.members = {{{0, 1, 2}, MemberKind::OddCycle}, {{3, 4, 5}, MemberKind::OddCycle}};
  t.internal_edges = {0, 1, 2, 3, 4, 5};
  t.connector_edges = {6, 7};
  t.quotient_tree = {{0, 1}, {0, 1}};
  CHECK_FALSE(validate(g, t).ok);
}

TEST_CASE("synthetic trees validate and leaves are odd cycles") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    auto [g, t] = random_cycle_cubic_tree(rng);
    CHECK(validate(g, t).ok);
    if (t.members.size() < 2) continue;
    std::vector<int> deg(t.members.size(), 0);
    for (auto [a, b] : t.quotient_tree) {
      ++deg[static_cast<size_t>(a)];
      ++deg[static_cast<size_t>(b)];
    }
    for (size_t m = 0; m < t.members.size(); ++m)
      if (deg[m] == 1) CHECK(t.members[m].kind == MemberKind::OddCycle);
  }
}

TEST_SUITE_END();
