#include <algorithm>
#include <set>

#include "doctest.h"
#include "support/testgraphs.hpp"
#include "zsflow/factor.hpp"
#include "zsflow/tjoin.hpp"

using namespace zsflow;
using namespace zsflow::testing;

namespace {

// Forest check plus odd-degree set comparison against the terminals.
void check_join(const Multigraph& q, const TJoinResult& join) {
  std::vector<int> deg(static_cast<size_t>(q.vertex_count()), 0);
  std::vector<int> parent(static_cast<size_t>(q.vertex_count()));
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
    return x;
  };
  for (EdgeId e : join.join_edges) {
    VertexId a = q.edge(e).a, b = q.edge(e).b;
    ++deg[static_cast<size_t>(a)];
    ++deg[static_cast<size_t>(b)];
    int ra = find(a), rb = find(b);
    CHECK(ra != rb);  // a cycle would mean the join is not a forest
    parent[static_cast<size_t>(rb)] = ra;
  }
  std::vector<int> odd;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (deg[static_cast<size_t>(v)] % 2 == 1) odd.push_back(v);
  CHECK(odd == join.terminals);
}

}  // namespace

TEST_SUITE_BEGIN("tjoin");

TEST_CASE("build_quotient of two triangles joined by one edge") {
  Multigraph g = bowtie_bridge();
  auto f = classify_components(g, {0, 1, 2, 3, 4, 5});
  auto q = build_quotient(g, f);
  CHECK(q.quotient.vertex_count() == 2);
  REQUIRE(q.quotient.edge_count() == 1);
  CHECK(q.edge_origin[0] == 6);
}

TEST_CASE("build_quotient collapses K6 over a spanning 6-cycle to a point") {
  Multigraph g = complete_graph(6);
  std::vector<EdgeId> hexagon;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = std::minmax(g.edge(e).a, g.edge(e).b);
    if (b - a == 1 || (a == 0 && b == 5)) hexagon.push_back(e);
  }
  auto q = build_quotient(g, classify_components(g, hexagon));
  CHECK(q.quotient.vertex_count() == 1);
  CHECK(q.quotient.edge_count() == 0);
}

TEST_CASE("build_quotient keeps parallel joining edges") {
  Multigraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  auto q = build_quotient(g, classify_components(g, {0, 1, 2, 3, 4, 5}));
  CHECK(q.quotient.vertex_count() == 2);
  CHECK(q.quotient.edge_count() == 3);
}

TEST_CASE("acyclic_tjoin on a star") {
  // Centre 0, leaves 1..4; edge e joins 0 and e+1.
  Multigraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto join = acyclic_tjoin(star, {1, 2});
  CHECK(join.join_edges == std::vector<EdgeId>{0, 1});
  check_join(star, join);
}

TEST_CASE("acyclic_tjoin with no terminals is empty") {
  auto join = acyclic_tjoin(cycle_graph(4), {});
  CHECK(join.join_edges.empty());
}

TEST_CASE("acyclic_tjoin on a path takes both edges") {
  Multigraph path(3, {{0, 1}, {1, 2}});
  auto join = acyclic_tjoin(path, {0, 2});
  CHECK(join.join_edges == std::vector<EdgeId>{0, 1});
  check_join(path, join);
}

TEST_CASE("acyclic_tjoin rejects odd terminal sets and disconnected graphs") {
  CHECK_THROWS_AS(acyclic_tjoin(cycle_graph(4), {0}), std::invalid_argument);
  Multigraph disc(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(acyclic_tjoin(disc, {0, 1}), std::invalid_argument);
}

TEST_CASE("random joins are forests with the exact odd-degree set") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    int n = 2 + static_cast<int>(bounded(rng, 18));
    Multigraph q = random_connected_multigraph(n, static_cast<int>(bounded(rng, 25)), rng);
    std::vector<int> verts(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) verts[static_cast<size_t>(v)] = v;
    for (int i = n - 1; i > 0; --i)
      std::swap(verts[static_cast<size_t>(i)], verts[bounded(rng, static_cast<size_t>(i) + 1)]);
    size_t tcount = 2 * bounded(rng, static_cast<size_t>(n) / 2 + 1);
    std::vector<int> terminals(verts.begin(), verts.begin() + static_cast<long>(tcount));
    auto join = acyclic_tjoin(q, terminals);
    check_join(q, join);
  }
}

TEST_CASE("lifting maps join edges into distinct factor components") {
  Multigraph g = bridge_star();
  auto h = find_23_factor_regular(g);
  auto q = build_quotient(g, h);
  std::vector<int> terminals;
  for (const auto& cyc : h.cycles)
    if (cyc.odd) terminals.push_back(q.partition.block_of[static_cast<size_t>(cyc.vertices[0])]);
  auto join = acyclic_tjoin(q.quotient, terminals, q.edge_origin);
  check_join(q.quotient, join);
  REQUIRE_FALSE(join.join_edges.empty());
  for (EdgeId e : join.lifted_edges) {
    CHECK(q.partition.block_of[static_cast<size_t>(g.edge(e).a)] !=
          q.partition.block_of[static_cast<size_t>(g.edge(e).b)]);
  }
}

TEST_SUITE_END();
