#include "zsflow/tjoin.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace zsflow {

QuotientResult build_quotient(const Multigraph& g, const FactorDecomposition& h) {
  // Blocks are components of the factor subgraph. The factor must span g, so
  // every vertex has factor degree >= 2 and lands in some block.
  std::vector<Edge> fedges;
  fedges.reserve(h.factor_edges.size());
  for (EdgeId e : h.factor_edges) fedges.push_back(g.edge(e));
  Multigraph factor_sub(g.vertex_count(), std::move(fedges));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (factor_sub.degree(v) == 0)
      throw std::invalid_argument("build_quotient: factor does not span vertex " + std::to_string(v));

  QuotientResult res;
  res.partition = component_partition(factor_sub);
  auto contracted = contract(g, res.partition);
  res.quotient = std::move(contracted.quotient);
  res.edge_origin = std::move(contracted.edge_origin);
  return res;
}

namespace {

struct BfsTree {
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<int> depth;
};

// Scans incident edges in increasing id order, so parallel edges resolve to
// the smallest original edge id after lifting.
BfsTree bfs_tree(const Multigraph& g, VertexId root) {
  BfsTree t;
  t.parent.assign(static_cast<size_t>(g.vertex_count()), -1);
  t.parent_edge.assign(static_cast<size_t>(g.vertex_count()), -1);
  t.depth.assign(static_cast<size_t>(g.vertex_count()), -1);
  std::queue<VertexId> q;
  q.push(root);
  t.depth[static_cast<size_t>(root)] = 0;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (EdgeId e : g.incident_edges(v)) {
      VertexId w = g.edge(e).other(v);
      if (t.depth[static_cast<size_t>(w)] != -1) continue;
      t.depth[static_cast<size_t>(w)] = t.depth[static_cast<size_t>(v)] + 1;
      t.parent[static_cast<size_t>(w)] = v;
      t.parent_edge[static_cast<size_t>(w)] = e;
      q.push(w);
    }
  }
  return t;
}

}  // namespace

TJoinResult acyclic_tjoin(const Multigraph& q, const std::vector<int>& terminals,
                          const std::vector<EdgeId>& edge_origin) {
  TJoinResult res;
  res.terminals = terminals;
  std::sort(res.terminals.begin(), res.terminals.end());
  if (res.terminals.size() % 2 != 0)
    throw std::invalid_argument("acyclic_tjoin: odd terminal count signals an upstream bug");
  for (int t : res.terminals) q.check_vertex(t);

  if (q.vertex_count() > 0) {
    BfsTree tree = bfs_tree(q, 0);
    for (int d : tree.depth)
      if (d == -1) throw std::invalid_argument("acyclic_tjoin: quotient graph disconnected");

    // Toggle fundamental tree paths of sorted terminal pairs; the surviving
    // odd-count edges form the join. Toggles are keyed by the child vertex.
    std::vector<char> odd(static_cast<size_t>(q.vertex_count()), 0);
    for (size_t i = 0; i + 1 < res.terminals.size(); i += 2) {
      VertexId a = res.terminals[i], b = res.terminals[i + 1];
      while (a != b) {
        if (tree.depth[static_cast<size_t>(a)] < tree.depth[static_cast<size_t>(b)]) std::swap(a, b);
        odd[static_cast<size_t>(a)] ^= 1;
        a = tree.parent[static_cast<size_t>(a)];
      }
    }
    for (VertexId v = 0; v < q.vertex_count(); ++v)
      if (odd[static_cast<size_t>(v)]) res.join_edges.push_back(tree.parent_edge[static_cast<size_t>(v)]);
    std::sort(res.join_edges.begin(), res.join_edges.end());
  }

  for (EdgeId e : res.join_edges)
    res.lifted_edges.push_back(edge_origin.empty() ? e : edge_origin[static_cast<size_t>(e)]);
  return res;
}

}  // namespace zsflow
