#pragma once

#include <string>
#include <vector>

#include "zsflow/cycle_cubic.hpp"
#include "zsflow/factor.hpp"
#include "zsflow/labeling.hpp"
#include "zsflow/multigraph.hpp"

namespace zsflow {

enum class Branch { TwoFactor, NoOddCycles, General };

const char* branch_name(Branch b);

struct SolveDiagnostics {
  std::vector<Branch> component_branches;
  int cycle_components = 0;
  int cubic_components = 0;
  int odd_cycles = 0;
  int tjoin_size = 0;
  int tree_count = 0;
  /// Tightest value bound actually used (4 on the two-factor path, 6 otherwise).
  int tight_bound = 6;

  std::string summary() const;
};

/// A zero-sum flow together with the bound it certifies and how it was built.
struct FlowCertificate {
  EdgeLabeling labeling;
  int bound = 6;
  Branch branch = Branch::TwoFactor;
  SolveDiagnostics diagnostics;
};

struct VerifyReport {
  bool ok = true;
  std::string violation;
};

/// Checks that f is total, nowhere zero, bounded by k-1 in magnitude, and
/// sums to zero around every vertex. Reports the first offending edge or
/// vertex.
VerifyReport verify(const Multigraph& g, const EdgeLabeling& f, int k);

/// Sum of f over all edge endpoints at v (a loop counts twice).
long long sum_at_vertex(const Multigraph& g, const EdgeLabeling& f, VertexId v);

/// Zero-sum 6-flow for any 5-regular multigraph. Connected components are
/// solved independently and merged. Per component the routing is:
///   1. a 2-factor exists: 3 on it, -2 on the complementary 3-factor;
///   2. the [2,3]-factor has no odd cycles: 4/5 alternating on its cycles,
///      2 on its cubic components, -3 outside the factor;
///   3. otherwise: pair the odd cycles through an acyclic T-join on the
///      quotient, label the resulting cycle-cubic trees, -3 outside them.
/// The certificate is verified before being returned; any internal stage
/// violation aborts with a diagnostic naming the stage.
FlowCertificate solve(const Multigraph& g);

/// Branch-1 labeling: factor edges 3, the rest -2.
EdgeLabeling label_two_factor_branch(const Multigraph& g, const FactorDecomposition& two_factor);

/// Branch-2 labeling for a factor without odd cycles: cycles alternate 4/5,
/// cubic components take 2, non-factor edges take -3.
EdgeLabeling label_even_factor_branch(const Multigraph& g, const FactorDecomposition& h);

}  // namespace zsflow
