#include <algorithm>
#include <set>

#include "doctest.h"
#include "support/testgraphs.hpp"
#include "zsflow/graph_io.hpp"
#include "zsflow/oracle.hpp"
#include "zsflow/solver.hpp"

using namespace zsflow;
using namespace zsflow::testing;

TEST_SUITE_BEGIN("solver");

TEST_CASE("verify accepts the classic K6 flow and reports violations") {
  Multigraph g = complete_graph(6);
  // Hamiltonian cycle 0-1-2-3-4-5-0 at 3, everything else at -2: a zero-sum
  // 4-flow.
  EdgeLabeling f;
  f.values.assign(static_cast<size_t>(g.edge_count()), -2);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = std::minmax(g.edge(e).a, g.edge(e).b);
    if (b - a == 1 || (a == 0 && b == 5)) f.values[static_cast<size_t>(e)] = 3;
  }
  CHECK(verify(g, f, 4).ok);
  CHECK(verify(g, f, 6).ok);

  Multigraph tri = cycle_graph(3);
  EdgeLabeling ones{{1, 1, 1}};
  auto report = verify(tri, ones, 6);
  CHECK_FALSE(report.ok);
  CHECK(report.violation.find("vertex") != std::string::npos);

  EdgeLabeling with_zero{{1, 0, -1}};
  CHECK_FALSE(verify(tri, with_zero, 6).ok);

  EdgeLabeling too_big{{5, -5, 5}};
  CHECK_FALSE(verify(tri, too_big, 4).ok);

  EdgeLabeling not_total{{1, -1}};
  CHECK_FALSE(verify(tri, not_total, 6).ok);
}

TEST_CASE("sum_at_vertex") {
  Multigraph c4 = cycle_graph(4);
  EdgeLabeling f{{4, 5, 4, 5}};
  for (VertexId v = 0; v < 4; ++v) CHECK(sum_at_vertex(c4, f, v) == 9);

  Multigraph k4 = complete_graph(4);
  EdgeLabeling twos{std::vector<int>(6, 2)};
  for (VertexId v = 0; v < 4; ++v) CHECK(sum_at_vertex(k4, twos, v) == 6);

  Multigraph looped = Multigraph::with_loops(1, {{0, 0}});
  EdgeLabeling lf{{4}};
  CHECK(sum_at_vertex(looped, lf, 0) == 8);
}

TEST_CASE("dumbbell fast path gives the frozen certificate") {
  FlowCertificate cert = solve(dumbbell());
  CHECK(cert.branch == Branch::TwoFactor);
  CHECK(cert.bound == 6);
  CHECK(cert.labeling.values == std::vector<int>{3, 3, -2, -2, -2});
  CHECK(cert.diagnostics.tight_bound == 4);
  CHECK(serialize_flow(cert) == "flow 6 two-factor\n3\n3\n-2\n-2\n-2\n");
}

TEST_CASE("K6 routes through the two-factor branch") {
  Multigraph g = complete_graph(6);
  FlowCertificate cert = solve(g);
  CHECK(cert.branch == Branch::TwoFactor);
  CHECK(verify(g, cert.labeling, 6).ok);
  for (int v : cert.labeling.values) CHECK((v == 3 || v == -2));
  for (VertexId v = 0; v < 6; ++v) CHECK(sum_at_vertex(g, cert.labeling, v) == 0);
}

TEST_CASE("K5,5 routes through the two-factor branch") {
  Multigraph g = complete_bipartite(5, 5);
  FlowCertificate cert = solve(g);
  CHECK(cert.branch == Branch::TwoFactor);
  CHECK(verify(g, cert.labeling, 6).ok);
  for (int v : cert.labeling.values) CHECK((v == 3 || v == -2));
}

TEST_CASE("icosahedron certificate verifies within +-5") {
  Multigraph g = icosahedron();
  FlowCertificate cert = solve(g);
  CHECK(verify(g, cert.labeling, 6).ok);
}

TEST_CASE("bridge star routes through the general branch") {
  Multigraph g = bridge_star();
  FlowCertificate cert = solve(g);
  CHECK(cert.branch == Branch::General);
  CHECK(verify(g, cert.labeling, 6).ok);
  CHECK(cert.diagnostics.tjoin_size > 0);
  CHECK(cert.diagnostics.tree_count > 0);
}

TEST_CASE("mixed-lobe bridge star also routes through the general branch") {
  Multigraph g = bridge_star_mixed();
  FlowCertificate cert = solve(g);
  CHECK(cert.branch == Branch::General);
  CHECK(verify(g, cert.labeling, 6).ok);
}

TEST_CASE("disconnected input is solved per component") {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({0, 1});
  for (int i = 0; i < 5; ++i) edges.push_back({2, 3});
  Multigraph g(4, std::move(edges));
  FlowCertificate cert = solve(g);
  CHECK(verify(g, cert.labeling, 6).ok);
  CHECK(cert.diagnostics.component_branches.size() == 2);
}

TEST_CASE("solve rejects non-5-regular input") {
  CHECK_THROWS_AS(solve(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("label_even_factor_branch gives a zero-sum 6-flow on a planted factor") {
  // Two 4-cycles as the cycle part, a 3-regular bipartite graph between
  // them as the complement: 5-regular host, factor has no odd cycles.
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) edges.push_back({i, (i + 1) % 4});
  for (int i = 0; i < 4; ++i) edges.push_back({4 + i, 4 + (i + 1) % 4});
  for (int i = 0; i < 4; ++i)
    for (int d = 0; d < 3; ++d) edges.push_back({i, 4 + (i + d) % 4});
  Multigraph g(8, std::move(edges));
  REQUIRE(is_regular(g, 5));
  auto h = classify_components(g, {0, 1, 2, 3, 4, 5, 6, 7});
  REQUIRE_FALSE(h.has_odd_cycles());
  EdgeLabeling f = label_even_factor_branch(g, h);
  CHECK(verify(g, f, 6).ok);
  for (EdgeId e = 0; e < 8; ++e) CHECK((f[e] == 4 || f[e] == 5));
  for (EdgeId e = 8; e < g.edge_count(); ++e) CHECK(f[e] == -3);
}

TEST_CASE("label_even_factor_branch handles cubic parts") {
  // K4 + K4 as the factor, an 8-cycle outside it.
  std::vector<Edge> edges;
  for (int base : {0, 4})
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges.push_back({base + i, base + j});
  // Outside 2-regular graph weaving between the K4s.
  std::vector<Edge> ring = {{0, 4}, {4, 1}, {1, 5}, {5, 2}, {2, 6}, {6, 3}, {3, 7}, {7, 0}};
  for (const Edge& e : ring) edges.push_back(e);
  Multigraph g(8, std::move(edges));
  REQUIRE(is_regular(g, 5));
  std::vector<EdgeId> factor;
  for (EdgeId e = 0; e < 12; ++e) factor.push_back(e);
  auto h = classify_components(g, factor);
  REQUIRE(h.cubics.size() == 2);
  EdgeLabeling f = label_even_factor_branch(g, h);
  CHECK(verify(g, f, 6).ok);
  std::set<int> values(f.values.begin(), f.values.end());
  CHECK(values == std::set<int>{-3, 2});
}

TEST_CASE("random instances verify and match the oracle at tiny sizes") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    int n = 2 * (1 + static_cast<int>(seed % 4));
    Multigraph g = gen_connected_5regular(n, seed * 1237);
    FlowCertificate cert = solve(g);
    CHECK(verify(g, cert.labeling, 6).ok);
    if (n <= 6) {
      auto oracle = brute_force_flow(g, 6, 20'000'000);
      CHECK(oracle.found());
    }
  }
}

TEST_CASE("certificates are deterministic") {
  Multigraph g = bridge_star();
  auto a = solve(g);
  auto b = solve(g);
  CHECK(a.labeling.values == b.labeling.values);
  CHECK(a.branch == b.branch);
}

TEST_SUITE_END();
