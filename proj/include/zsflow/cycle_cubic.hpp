#pragma once

#include <string>
#include <vector>

#include "zsflow/factor.hpp"
#include "zsflow/multigraph.hpp"
#include "zsflow/tjoin.hpp"

namespace zsflow {

enum class MemberKind { OddCycle, EvenCycle, Cubic };

const char* member_kind_name(MemberKind k);

struct TreeMember {
  std::vector<VertexId> vertices;  // sorted host vertex ids
  MemberKind kind = MemberKind::EvenCycle;
};

/// A subgraph of the host graph partitioned into vertex-disjoint cycle and
/// cubic members whose contraction is a tree, with member parity matching
/// the tree degree: a member has even tree degree exactly when it is an even
/// cycle or a cubic graph. quotient_tree[i] names the member pair joined by
/// connector_edges[i].
struct CycleCubicTree {
  std::vector<TreeMember> members;
  std::vector<EdgeId> internal_edges;
  std::vector<EdgeId> connector_edges;
  std::vector<std::pair<int, int>> quotient_tree;
};

/// Groups factor components along the lifted join edges into cycle-cubic
/// trees; components untouched by the join become singleton trees. The
/// resulting trees cover every factor component and every vertex of g.
/// Any tree failing validation signals an upstream bug and throws.
std::vector<CycleCubicTree> assemble(const Multigraph& g, const FactorDecomposition& h,
                                     const TJoinResult& join);

struct TreeValidation {
  bool ok = true;
  std::string violation;
};

/// Checks the defining clauses of a cycle-cubic tree against the host graph:
/// (a) members partition the subgraph's vertices, (b) contracting members
/// yields exactly quotient_tree and it is a tree, (c) tree-degree parity
/// matches member kind, plus member shape and the max-degree-5 hypothesis.
/// Reports the first violated clause with a witness member.
TreeValidation validate(const Multigraph& g, const CycleCubicTree& t);

}  // namespace zsflow
