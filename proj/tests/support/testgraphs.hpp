#pragma once

#include <cstdint>
#include <random>

#include "zsflow/cycle_cubic.hpp"
#include "zsflow/multigraph.hpp"

namespace zsflow::testing {

// Deterministic bounded draw shared by the randomized suites.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n);

Multigraph cycle_graph(int n);
Multigraph complete_graph(int n);
Multigraph complete_bipartite(int a, int b);

/// Two vertices joined by five parallel edges; the smallest 5-regular graph.
Multigraph dumbbell();

/// 12 vertices, 30 edges, 5-regular.
Multigraph icosahedron();

/// Triangular prism (cubic, 6 vertices).
Multigraph prism();

/// Two vertices joined by three parallel edges (the smallest cubic graph).
Multigraph theta();

Multigraph petersen();

/// 5-regular, 26 vertices, no 2-factor: a centre vertex whose five edges are
/// all bridges into five lobes, so the centre cannot lie on any cycle.
/// Every spanning regular-component factor must route odd cycles through the
/// untouched lobes, which also forces the general solver path.
Multigraph bridge_star();

/// Same construction with lobe sizes 5,7,5,7,7 (32 vertices); the odd lobe
/// sizes force odd cycles exactly as above but yield different tree shapes.
Multigraph bridge_star_mixed();

/// Two triangles joined by a single edge; the smallest nontrivial
/// cycle-cubic tree. Vertices 0,1,2 / 3,4,5, connector edge id 6 = (2,3).
Multigraph bowtie_bridge();

/// Resamples the configuration model until the result is connected.
/// Deterministic: attempt i perturbs the seed by a fixed odd constant.
Multigraph gen_connected_5regular(int n, std::uint64_t seed);

/// Random spanning tree plus `extra_edges` random non-loop edges (parallel
/// edges permitted).
Multigraph random_connected_multigraph(int n, int extra_edges, std::mt19937_64& rng);

/// A random valid cycle-cubic tree together with its host graph (the host is
/// exactly the tree's subgraph). Member kinds follow the tree-degree
/// parities; connector endpoints respect the degree-5 cap.
struct SyntheticTree {
  Multigraph graph;
  CycleCubicTree tree;
};
SyntheticTree random_cycle_cubic_tree(std::mt19937_64& rng);

}  // namespace zsflow::testing
