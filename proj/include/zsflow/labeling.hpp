#pragma once

#include <string>
#include <vector>

#include "zsflow/cycle_cubic.hpp"
#include "zsflow/factor.hpp"
#include "zsflow/multigraph.hpp"

namespace zsflow {

/// Edge-indexed integer labels. A labeling is total on its domain (the whole
/// graph for flows, the tree's edges for tree labelings); edges outside the
/// domain hold 0, edges inside are never 0.
struct EdgeLabeling {
  std::vector<int> values;

  int operator[](EdgeId e) const { return values[static_cast<size_t>(e)]; }
};

/// Pairwise edge-disjoint, vertex-simple paths whose endpoints are exactly a
/// prescribed even vertex set.
struct PathPairing {
  struct Path {
    std::vector<VertexId> vertices;  // v0..vL in walk order
    std::vector<EdgeId> edges;       // edges[i] joins vertices[i], vertices[i+1]
  };
  std::vector<Path> paths;
};

/// Pairs up an even set of distinct vertices of a connected graph with
/// edge-disjoint simple paths. Works inside one spanning tree: the symmetric
/// difference of the fundamental tree paths of the sorted endpoint pairs is a
/// forest whose odd-degree vertices are exactly the endpoint set, and paths
/// are peeled off it leaf by leaf. The pairing realized by the output is the
/// construction's own choice.
PathPairing pair_paths(const Multigraph& g, std::vector<VertexId> endpoints);

/// Value classes and vertex sums the tree labeler must hit: cycle edges take
/// 4 or 5, cubic edges 1..3, connectors -2 or -4, and each vertex of degree
/// d in the tree sums to 3*(5-d).
struct LabelTarget {
  static bool cycle_value(int v) { return v == 4 || v == 5; }
  static bool cubic_value(int v) { return v >= 1 && v <= 3; }
  static bool connector_value(int v) { return v == -2 || v == -4; }
  static bool degree_in_range(int d) { return d >= 2 && d <= 5; }
  static int required_sum(int degree) { return 3 * (5 - degree); }
};

/// Alternate start_value, 9-start_value, ... around an even cycle beginning
/// at c.edges[0]; every vertex then sums to 9. start_value must be 4 or 5.
std::vector<int> label_even_cycle(const CycleComponent& c, int start_value);

/// All edges of a connected cubic component get 2; every vertex sums to 6.
std::vector<int> label_cubic(const Multigraph& g, const CubicComponent& r);

/// Alternate around an odd cycle starting and ending at the anchor, so both
/// anchor edges carry anchor_value (a length-1 loop carries it once and
/// contributes it twice). Non-anchor vertices sum to 9. Values align with
/// c.edges.
std::vector<int> label_odd_cycle_from_anchor(const CycleComponent& c, VertexId anchor,
                                             int anchor_value);

/// Labels a validated cycle-cubic tree to meet LabelTarget exactly, by
/// recursion on the tree: even-cycle/cubic base cases, cycle shrinking at an
/// odd-cycle leaf, cubic elimination through path pairing and parity gadgets,
/// and cut-vertex splitting fused with the forced shrink that follows it.
/// Intermediate graphs may carry loops (a shrunk 2-cycle); inputs and the
/// returned labeling never do. Throws on invalid trees and on recursion
/// exceeding 4x the tree's edge count.
EdgeLabeling label_cycle_cubic_tree(const Multigraph& g, const CycleCubicTree& t);

struct LabelCheck {
  bool ok = true;
  std::string violation;
};

/// Checks a labeling against LabelTarget on a tree: per-edge value classes by
/// edge role and exact per-degree vertex sums.
LabelCheck check_label_constraints(const Multigraph& g, const CycleCubicTree& t,
                                   const EdgeLabeling& f);

}  // namespace zsflow
