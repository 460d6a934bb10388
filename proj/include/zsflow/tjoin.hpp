#pragma once

#include <vector>

#include "zsflow/factor.hpp"
#include "zsflow/multigraph.hpp"

namespace zsflow {

struct QuotientResult {
  Multigraph quotient;
  VertexPartition partition;      // blocks = factor components, by smallest vertex
  std::vector<EdgeId> edge_origin;  // quotient edge id -> original edge id
};

/// Contract each component of a spanning factor to a single quotient vertex.
QuotientResult build_quotient(const Multigraph& g, const FactorDecomposition& h);

/// T-join that induces a forest: a quotient edge set whose odd-degree
/// vertices are exactly the terminal set.
struct TJoinResult {
  std::vector<int> terminals;      // block ids, sorted
  std::vector<EdgeId> join_edges;  // quotient edge ids, sorted
  std::vector<EdgeId> lifted_edges;  // corresponding original edge ids
};

/// Builds the join inside one spanning tree of q: terminals are paired in
/// sorted order and the symmetric difference of their fundamental tree paths
/// is taken, which is acyclic by construction. |terminals| must be even and
/// q connected. `edge_origin` (optional) translates join edges into
/// lifted_edges; when empty, lifted_edges repeats join_edges.
TJoinResult acyclic_tjoin(const Multigraph& q, const std::vector<int>& terminals,
                          const std::vector<EdgeId>& edge_origin = {});

}  // namespace zsflow
