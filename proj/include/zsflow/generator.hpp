#pragma once

#include <cstdint>

#include "zsflow/multigraph.hpp"

namespace zsflow {

struct GeneratorConfig {
  int vertex_count = 0;       // must be even: 5n stubs pair up
  std::uint64_t seed = 0;
  int max_resamples = 1000;
};

/// Configuration-model 5-regular multigraph: five stubs per vertex, paired
/// by a seeded shuffle. A pairing that closes a loop triggers a full
/// resample; parallel edges are kept. Deterministic per seed across
/// platforms (no std::uniform_int_distribution). Throws when the resample
/// budget runs out or vertex_count is not a positive even number.
Multigraph gen_random_5regular(const GeneratorConfig& cfg);

}  // namespace zsflow
