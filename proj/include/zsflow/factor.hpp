#pragma once

#include <optional>
#include <vector>

#include "zsflow/multigraph.hpp"

namespace zsflow {

/// Connected 2-regular piece of a factor, vertices and edges in cyclic order:
/// edges[i] joins vertices[i] and vertices[(i+1) % L].
struct CycleComponent {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  bool odd = false;
};

/// Connected 3-regular piece of a factor.
struct CubicComponent {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

/// Spanning subgraph with every degree in {2,3} whose components are all
/// regular: 2-regular cycles or connected cubic graphs. Components are
/// ordered by smallest contained vertex.
struct FactorDecomposition {
  std::vector<EdgeId> factor_edges;
  std::vector<CycleComponent> cycles;
  std::vector<CubicComponent> cubics;

  bool has_odd_cycles() const {
    for (const auto& c : cycles)
      if (c.odd) return true;
    return false;
  }
  int odd_cycle_count() const {
    int k = 0;
    for (const auto& c : cycles) k += c.odd ? 1 : 0;
    return k;
  }
};

/// Exact search for a spanning 2-regular subgraph of a 5-regular multigraph.
/// Returns the first factor found under deterministic vertex/edge ordering;
/// absence is exact (the search is exhaustive).
std::optional<FactorDecomposition> find_two_factor(const Multigraph& g);

/// Spanning [2,3]-factor of a connected 5-regular multigraph, each component
/// regular. Tries find_two_factor first, then falls back to exact
/// backtracking over per-vertex edge subsets with degree, feasibility and
/// closed-component-regularity pruning. Search exhaustion throws: existence
/// is guaranteed for this input class, so it signals a bug.
FactorDecomposition find_23_factor_regular(const Multigraph& g);

/// Split a factor edge set into classified regular components. Throws with a
/// witness vertex/component if the edges do not induce a spanning subgraph
/// with degrees in {2,3} and regular components.
FactorDecomposition classify_components(const Multigraph& g, const std::vector<EdgeId>& factor_edges);

}  // namespace zsflow
