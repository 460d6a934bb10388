#include "zsflow/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "zsflow/tjoin.hpp"

namespace zsflow {

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::TwoFactor: return "two-factor";
    case Branch::NoOddCycles: return "no-odd-cycles";
    case Branch::General: return "general";
  }
  return "?";
}

std::string SolveDiagnostics::summary() const {
  std::string s = "components=" + std::to_string(component_branches.size());
  s += " cycles=" + std::to_string(cycle_components);
  s += " cubics=" + std::to_string(cubic_components);
  s += " odd-cycles=" + std::to_string(odd_cycles);
  s += " tjoin=" + std::to_string(tjoin_size);
  s += " trees=" + std::to_string(tree_count);
  s += " tight-bound=" + std::to_string(tight_bound);
  return s;
}

long long sum_at_vertex(const Multigraph& g, const EdgeLabeling& f, VertexId v) {
  g.check_vertex(v);
  long long s = 0;
  for (EdgeId e : g.incident_edges(v)) s += f[e];  // loops are listed twice
  return s;
}

VerifyReport verify(const Multigraph& g, const EdgeLabeling& f, int k) {
  if (f.values.size() != static_cast<size_t>(g.edge_count()))
    return {false, "labeling is not total: " + std::to_string(f.values.size()) + " values for " +
                       std::to_string(g.edge_count()) + " edges"};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int v = f[e];
    if (v == 0) return {false, "edge " + std::to_string(e) + " carries 0"};
    if (v > k - 1 || v < -(k - 1))
      return {false, "edge " + std::to_string(e) + " carries " + std::to_string(v) +
                         ", outside +-" + std::to_string(k - 1)};
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    long long s = sum_at_vertex(g, f, v);
    if (s != 0)
      return {false, "vertex " + std::to_string(v) + " sums to " + std::to_string(s)};
  }
  return {};
}

EdgeLabeling label_two_factor_branch(const Multigraph& g, const FactorDecomposition& two_factor) {
  EdgeLabeling f;
  f.values.assign(static_cast<size_t>(g.edge_count()), -2);
  for (EdgeId e : two_factor.factor_edges) f.values[static_cast<size_t>(e)] = 3;
  return f;
}

EdgeLabeling label_even_factor_branch(const Multigraph& g, const FactorDecomposition& h) {
  if (h.has_odd_cycles())
    throw std::invalid_argument("label_even_factor_branch: factor contains odd cycles");
  EdgeLabeling f;
  f.values.assign(static_cast<size_t>(g.edge_count()), -3);
  for (const auto& cyc : h.cycles) {
    auto vals = label_even_cycle(cyc, 4);
    for (size_t i = 0; i < cyc.edges.size(); ++i)
      f.values[static_cast<size_t>(cyc.edges[i])] = vals[i];
  }
  for (const auto& cub : h.cubics)
    for (EdgeId e : cub.edges) f.values[static_cast<size_t>(e)] = 2;
  return f;
}

namespace {

struct ComponentSolve {
  EdgeLabeling labeling;
  Branch branch = Branch::TwoFactor;
};

ComponentSolve solve_connected(const Multigraph& g, SolveDiagnostics& diag) {
  if (auto two = find_two_factor(g)) {
    diag.cycle_components += static_cast<int>(two->cycles.size());
    return {label_two_factor_branch(g, *two), Branch::TwoFactor};
  }

  FactorDecomposition h = find_23_factor_regular(g);
  diag.cycle_components += static_cast<int>(h.cycles.size());
  diag.cubic_components += static_cast<int>(h.cubics.size());
  diag.odd_cycles += h.odd_cycle_count();

  if (!h.has_odd_cycles()) return {label_even_factor_branch(g, h), Branch::NoOddCycles};

  // General path: pair the odd cycles with an acyclic T-join on the
  // quotient, assemble cycle-cubic trees and label them; everything outside
  // the trees takes -3.
  QuotientResult q = build_quotient(g, h);
  if (h.odd_cycle_count() % 2 != 0)
    throw std::logic_error("solve: odd number of odd cycles in a 5-regular factor");

  // Terminal blocks are the quotient vertices of the odd cycles.
  std::vector<int> terminals;
  for (const auto& cyc : h.cycles)
    if (cyc.odd) terminals.push_back(q.partition.block_of[static_cast<size_t>(cyc.vertices[0])]);
  TJoinResult join = acyclic_tjoin(q.quotient, terminals, q.edge_origin);
  diag.tjoin_size += static_cast<int>(join.join_edges.size());

  std::vector<CycleCubicTree> trees = assemble(g, h, join);
  diag.tree_count += static_cast<int>(trees.size());

  EdgeLabeling f;
  f.values.assign(static_cast<size_t>(g.edge_count()), -3);
  std::vector<char> in_tree_edge(static_cast<size_t>(g.edge_count()), 0);
  std::vector<int> tree_degree(static_cast<size_t>(g.vertex_count()), 0);
  for (const auto& tree : trees) {
    EdgeLabeling tf = label_cycle_cubic_tree(g, tree);
    for (const auto& edge_set : {tree.internal_edges, tree.connector_edges})
      for (EdgeId e : edge_set) {
        f.values[static_cast<size_t>(e)] = tf[e];
        in_tree_edge[static_cast<size_t>(e)] = 1;
        ++tree_degree[static_cast<size_t>(g.edge(e).a)];
        ++tree_degree[static_cast<size_t>(g.edge(e).b)];
      }
  }
  // Interface identity: the in-tree sum at each vertex offsets its -3 edges.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    long long in_tree = 0;
    for (EdgeId e : g.incident_edges(v))
      if (in_tree_edge[static_cast<size_t>(e)]) in_tree += f[e];
    long long outside = g.degree(v) - tree_degree[static_cast<size_t>(v)];
    if (in_tree != 3 * outside)
      throw std::logic_error("solve: tree labeling does not offset the outside edges at vertex " +
                             std::to_string(v));
  }
  return {std::move(f), Branch::General};
}

}  // namespace

FlowCertificate solve(const Multigraph& g) {
  if (g.has_loop()) throw std::invalid_argument("solve: input carries a loop");
  if (!is_regular(g, 5)) throw std::invalid_argument("solve: input not 5-regular");

  FlowCertificate cert;
  cert.bound = 6;
  cert.labeling.values.assign(static_cast<size_t>(g.edge_count()), 0);

  auto comps = components(g);
  for (const auto& cv : comps) {
    auto sub = induced_subgraph(g, cv);
    ComponentSolve cs = solve_connected(sub.graph, cert.diagnostics);
    cert.diagnostics.component_branches.push_back(cs.branch);
    for (size_t i = 0; i < cs.labeling.values.size(); ++i)
      cert.labeling.values[static_cast<size_t>(sub.edge_origin[i])] = cs.labeling.values[i];
  }

  // Certificate branch is the most general branch any component needed.
  cert.branch = Branch::TwoFactor;
  for (Branch b : cert.diagnostics.component_branches)
    if (static_cast<int>(b) > static_cast<int>(cert.branch)) cert.branch = b;
  cert.diagnostics.tight_bound = (cert.branch == Branch::TwoFactor) ? 4 : 6;

  auto report = verify(g, cert.labeling, cert.bound);
  if (!report.ok)
    throw std::logic_error("solve: certificate failed verification: " + report.violation);
  return cert;
}

}  // namespace zsflow
