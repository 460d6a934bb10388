#include "zsflow/multigraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace zsflow {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : Multigraph(vertex_count, std::move(edges), /*allow_loops=*/false) {}

Multigraph Multigraph::with_loops(int vertex_count, std::vector<Edge> edges) {
  return Multigraph(vertex_count, std::move(edges), /*allow_loops=*/true);
}

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges, bool allow_loops)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
  incidence_.assign(static_cast<size_t>(vertex_count_), {});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    if (ed.a < 0 || ed.a >= vertex_count_ || ed.b < 0 || ed.b >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (ed.is_loop()) {
      if (!allow_loops) throw std::invalid_argument("loop edge not permitted");
      has_loop_ = true;
      incidence_[static_cast<size_t>(ed.a)].push_back(e);
      incidence_[static_cast<size_t>(ed.a)].push_back(e);
    } else {
      incidence_[static_cast<size_t>(ed.a)].push_back(e);
      incidence_[static_cast<size_t>(ed.b)].push_back(e);
    }
  }
}

int Multigraph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(incidence_[static_cast<size_t>(v)].size());
}

const std::vector<EdgeId>& Multigraph::incident_edges(VertexId v) const {
  check_vertex(v);
  return incidence_[static_cast<size_t>(v)];
}

void Multigraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count_) throw std::invalid_argument("invalid vertex id");
}

std::vector<std::vector<VertexId>> components(const Multigraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (seen[static_cast<size_t>(root)]) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> frontier;
    frontier.push(root);
    seen[static_cast<size_t>(root)] = 1;
    while (!frontier.empty()) {
      VertexId v = frontier.front();
      frontier.pop();
      comp.push_back(v);
      for (EdgeId e : g.incident_edges(v)) {
        VertexId w = g.edge(e).other(v);
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          frontier.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

VertexPartition component_partition(const Multigraph& g) {
  VertexPartition p;
  p.block_of.assign(static_cast<size_t>(g.vertex_count()), -1);
  auto comps = components(g);
  p.block_count = static_cast<int>(comps.size());
  for (int b = 0; b < p.block_count; ++b)
    for (VertexId v : comps[static_cast<size_t>(b)]) p.block_of[static_cast<size_t>(v)] = b;
  return p;
}

ContractionResult contract(const Multigraph& g, const VertexPartition& p) {
  if (static_cast<int>(p.block_of.size()) != g.vertex_count())
    throw std::invalid_argument("partition does not cover all vertices");
  for (int b : p.block_of)
    if (b < 0 || b >= p.block_count)
      throw std::invalid_argument("partition block id out of range");

  ContractionResult res;
  std::vector<Edge> qedges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int ba = p.block_of[static_cast<size_t>(g.edge(e).a)];
    int bb = p.block_of[static_cast<size_t>(g.edge(e).b)];
    if (ba == bb) {
      ++res.dropped_loops;
      continue;
    }
    qedges.push_back({ba, bb});
    res.edge_origin.push_back(e);
  }
  res.quotient = Multigraph(p.block_count, std::move(qedges));
  return res;
}

std::vector<EdgeId> edge_cut(const Multigraph& g, const std::vector<VertexId>& x,
                             const std::vector<VertexId>& y) {
  std::vector<char> in_x(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<char> in_y(static_cast<size_t>(g.vertex_count()), 0);
  for (VertexId v : x) {
    g.check_vertex(v);
    in_x[static_cast<size_t>(v)] = 1;
  }
  for (VertexId v : y) {
    g.check_vertex(v);
    if (in_x[static_cast<size_t>(v)]) throw std::invalid_argument("edge_cut: sets overlap");
    in_y[static_cast<size_t>(v)] = 1;
  }
  std::vector<EdgeId> cut;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    VertexId a = g.edge(e).a, b = g.edge(e).b;
    bool cross = (in_x[static_cast<size_t>(a)] && in_y[static_cast<size_t>(b)]) ||
                 (in_x[static_cast<size_t>(b)] && in_y[static_cast<size_t>(a)]);
    if (cross) cut.push_back(e);
  }
  return cut;
}

bool is_regular(const Multigraph& g, int r) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != r) return false;
  return true;
}

InducedSubgraph induced_subgraph(const Multigraph& g, const std::vector<VertexId>& keep) {
  InducedSubgraph sub;
  sub.vertex_to_sub.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (VertexId v : keep) {
    g.check_vertex(v);
    if (sub.vertex_to_sub[static_cast<size_t>(v)] != -1)
      throw std::invalid_argument("induced_subgraph: duplicate vertex");
    sub.vertex_to_sub[static_cast<size_t>(v)] = static_cast<int>(sub.vertex_origin.size());
    sub.vertex_origin.push_back(v);
  }
  std::vector<Edge> edges;
  bool loops = false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int sa = sub.vertex_to_sub[static_cast<size_t>(g.edge(e).a)];
    int sb = sub.vertex_to_sub[static_cast<size_t>(g.edge(e).b)];
    if (sa == -1 || sb == -1) continue;
    if (sa == sb && g.edge(e).is_loop()) loops = true;
    edges.push_back({sa, sb});
    sub.edge_origin.push_back(e);
  }
  int n = static_cast<int>(sub.vertex_origin.size());
  sub.graph = loops ? Multigraph::with_loops(n, std::move(edges)) : Multigraph(n, std::move(edges));
  return sub;
}

}  // namespace zsflow
