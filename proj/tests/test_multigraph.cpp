#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "support/testgraphs.hpp"
#include "zsflow/multigraph.hpp"

using namespace zsflow;
using namespace zsflow::testing;

TEST_SUITE_BEGIN("multigraph");

TEST_CASE("degree counts endpoints, loops twice") {
  Multigraph tri = cycle_graph(3);
  for (VertexId v = 0; v < 3; ++v) CHECK(tri.degree(v) == 2);

  Multigraph db = dumbbell();
  CHECK(db.degree(0) == 5);
  CHECK(db.degree(1) == 5);

  Multigraph looped = Multigraph::with_loops(2, {{0, 0}, {0, 1}});
  CHECK(looped.degree(0) == 3);
  CHECK(looped.degree(1) == 1);

  CHECK_THROWS_AS(tri.degree(7), std::invalid_argument);
}

TEST_CASE("public constructor rejects loops") {
  CHECK_THROWS_AS(Multigraph(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("components") {
  CHECK(components(cycle_graph(3)).size() == 1);

  Multigraph two_tris(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto comps = components(two_tris);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<VertexId>{0, 1, 2});
  CHECK(comps[1] == std::vector<VertexId>{3, 4, 5});

  Multigraph empty4(4, {});
  CHECK(components(empty4).size() == 4);
}

TEST_CASE("contract two triangles joined by one edge") {
  Multigraph g = bowtie_bridge();
  VertexPartition p{{0, 0, 0, 1, 1, 1}, 2};
  auto res = contract(g, p);
  CHECK(res.quotient.vertex_count() == 2);
  REQUIRE(res.quotient.edge_count() == 1);
  CHECK(res.edge_origin[0] == 6);
  CHECK(res.dropped_loops == 6);
}

TEST_CASE("contract keeps parallel quotient edges distinct") {
  Multigraph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  VertexPartition p{{0, 0, 0, 1, 1, 1}, 2};
  auto res = contract(g, p);
  CHECK(res.quotient.vertex_count() == 2);
  CHECK(res.quotient.edge_count() == 3);
  CHECK(res.edge_origin == std::vector<EdgeId>{6, 7, 8});
}

TEST_CASE("contract with the identity partition is the identity") {
  Multigraph g = complete_graph(4);
  VertexPartition p{{0, 1, 2, 3}, 4};
  auto res = contract(g, p);
  CHECK(res.quotient.vertex_count() == 4);
  REQUIRE(res.quotient.edge_count() == g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    CHECK(res.edge_origin[static_cast<size_t>(e)] == e);
    CHECK(res.quotient.edge(e).a == g.edge(e).a);
    CHECK(res.quotient.edge(e).b == g.edge(e).b);
  }
  CHECK(res.dropped_loops == 0);
}

TEST_CASE("contract requires a covering partition") {
  Multigraph g = cycle_graph(3);
  CHECK_THROWS_AS(contract(g, VertexPartition{{0, 0}, 1}), std::invalid_argument);
}

TEST_CASE("edge_cut") {
  Multigraph g = bowtie_bridge();
  CHECK(edge_cut(g, {0, 1, 2}, {3, 4, 5}) == std::vector<EdgeId>{6});

  Multigraph c4 = cycle_graph(4);
  CHECK(edge_cut(c4, {0, 1}, {2, 3}).size() == 2);

  Multigraph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(edge_cut(two, {0, 1, 2}, {3, 4, 5}).empty());

  CHECK_THROWS_AS(edge_cut(c4, {0, 1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("degree sum is twice the edge count on random graphs") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    int n = 2 + static_cast<int>(bounded(rng, 20));
    Multigraph g = random_connected_multigraph(n, static_cast<int>(bounded(rng, 30)), rng);
    long long total = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    CHECK(total == 2ll * g.edge_count());

    auto comps = components(g);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (const auto& c : comps)
      for (VertexId v : c) {
        CHECK(!seen[static_cast<size_t>(v)]);
        seen[static_cast<size_t>(v)] = 1;
      }
    CHECK(std::count(seen.begin(), seen.end(), 1) == n);
  }
}

TEST_CASE("contraction maps quotient edges bijectively onto cross edges") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 30; ++it) {
    int n = 3 + static_cast<int>(bounded(rng, 12));
    Multigraph g = random_connected_multigraph(n, static_cast<int>(bounded(rng, 20)), rng);
    VertexPartition p;
    p.block_count = 2 + static_cast<int>(bounded(rng, 3));
    for (int v = 0; v < n; ++v)
      p.block_of.push_back(static_cast<int>(bounded(rng, p.block_count)));
    auto res = contract(g, p);

    int cross = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (p.block_of[static_cast<size_t>(g.edge(e).a)] != p.block_of[static_cast<size_t>(g.edge(e).b)])
        ++cross;
    CHECK(res.quotient.edge_count() == cross);
    CHECK(res.dropped_loops == g.edge_count() - cross);
    for (EdgeId q = 0; q < res.quotient.edge_count(); ++q) {
      EdgeId e = res.edge_origin[static_cast<size_t>(q)];
      CHECK(res.quotient.edge(q).a == p.block_of[static_cast<size_t>(g.edge(e).a)]);
      CHECK(res.quotient.edge(q).b == p.block_of[static_cast<size_t>(g.edge(e).b)]);
    }
  }
}

TEST_SUITE_END();
