#pragma once

#include <cstdint>
#include <optional>

#include "zsflow/labeling.hpp"
#include "zsflow/multigraph.hpp"

namespace zsflow {

struct OracleOutcome {
  std::optional<EdgeLabeling> labeling;
  long long nodes_explored = 0;
  bool budget_exhausted = false;

  bool found() const { return labeling.has_value(); }
  /// True only after the whole search space was explored without a hit.
  bool exhaustive_none() const { return !found() && !budget_exhausted; }
};

/// Independent exhaustive zero-sum k-flow search, used to cross-check the
/// constructive solver at small scale. Depth-first over edge values in
/// {+-1..+-(k-1)} along a fixed edge order that closes vertices early,
/// pruning a vertex whose assigned sum can no longer reach zero. The last
/// open edge at a vertex is forced rather than enumerated. Deterministic
/// given the graph and budget.
OracleOutcome brute_force_flow(const Multigraph& g, int k, long long node_budget = 100'000'000);

}  // namespace zsflow
