#pragma once

#include <string>
#include <vector>

namespace zsflow {

using VertexId = int;
using EdgeId = int;

/// Undirected edge. Endpoints are stored in the order given at construction;
/// edge identity is the position in the graph's edge list, so parallel edges
/// stay distinguishable.
struct Edge {
  VertexId a = -1;
  VertexId b = -1;

  VertexId other(VertexId v) const { return v == a ? b : a; }
  bool is_loop() const { return a == b; }
};

/// Loopless undirected multigraph with dense vertex ids [0, n) and stable
/// edge identities. Immutable after construction; safe to share read-only.
///
/// Loops are rejected by the public constructor. The labeling machinery
/// shrinks cycles through intermediate graphs that may carry loops, so
/// `with_loops` exists for internal use; a loop counts twice toward the
/// degree of its vertex and appears twice in its incidence list.
class Multigraph {
public:
  Multigraph() = default;
  Multigraph(int vertex_count, std::vector<Edge> edges);

  static Multigraph with_loops(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Number of edge endpoints at v; a loop contributes 2.
  int degree(VertexId v) const;

  /// Edge ids with an endpoint at v, in increasing id order; a loop id
  /// appears twice.
  const std::vector<EdgeId>& incident_edges(VertexId v) const;

  bool has_loop() const { return has_loop_; }

  void check_vertex(VertexId v) const;

private:
  Multigraph(int vertex_count, std::vector<Edge> edges, bool allow_loops);

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  bool has_loop_ = false;
};

/// Connected components as vertex sets, each sorted ascending, ordered by
/// smallest contained vertex.
std::vector<std::vector<VertexId>> components(const Multigraph& g);

/// Assignment of every vertex to one of `block_count` dense block ids.
struct VertexPartition {
  std::vector<int> block_of;
  int block_count = 0;
};

/// Partition whose blocks are the connected components of g.
VertexPartition component_partition(const Multigraph& g);

struct ContractionResult {
  Multigraph quotient;
  /// quotient edge id -> pre-image edge id in the source graph
  std::vector<EdgeId> edge_origin;
  /// edges dropped because both endpoints fell into one block
  int dropped_loops = 0;
};

/// Contract each block of p to a single vertex, deleting resultant loops.
/// Cross-block edges survive in source order (parallel quotient edges stay
/// distinct) with their pre-image recorded in edge_origin.
ContractionResult contract(const Multigraph& g, const VertexPartition& p);

/// Edges with one endpoint in X and the other in Y. X and Y must be disjoint.
std::vector<EdgeId> edge_cut(const Multigraph& g, const std::vector<VertexId>& x,
                             const std::vector<VertexId>& y);

bool is_regular(const Multigraph& g, int r);

struct InducedSubgraph {
  Multigraph graph;
  std::vector<VertexId> vertex_origin;  // sub id -> source id
  std::vector<int> vertex_to_sub;       // source id -> sub id or -1
  std::vector<EdgeId> edge_origin;      // sub edge id -> source edge id
};

/// Subgraph induced by `keep` (edges with both endpoints kept, source order).
InducedSubgraph induced_subgraph(const Multigraph& g, const std::vector<VertexId>& keep);

}  // namespace zsflow
