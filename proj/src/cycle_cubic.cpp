#include "zsflow/cycle_cubic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace zsflow {

const char* member_kind_name(MemberKind k) {
  switch (k) {
    case MemberKind::OddCycle: return "odd-cycle";
    case MemberKind::EvenCycle: return "even-cycle";
    case MemberKind::Cubic: return "cubic";
  }
  return "?";
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

}  // namespace

std::vector<CycleCubicTree> assemble(const Multigraph& g, const FactorDecomposition& h,
                                     const TJoinResult& join) {
  // Canonical member universe: factor components in smallest-vertex order,
  // the same blocks build_quotient produces.
  struct Comp {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    MemberKind kind;
  };
  std::vector<Comp> comps;
  for (const auto& c : h.cycles)
    comps.push_back({c.vertices, c.edges, c.odd ? MemberKind::OddCycle : MemberKind::EvenCycle});
  for (const auto& c : h.cubics) comps.push_back({c.vertices, c.edges, MemberKind::Cubic});
  std::stable_sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
    return *std::min_element(a.vertices.begin(), a.vertices.end()) <
           *std::min_element(b.vertices.begin(), b.vertices.end());
  });

  std::vector<int> comp_of(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < comps.size(); ++i)
    for (VertexId v : comps[i].vertices) comp_of[static_cast<size_t>(v)] = static_cast<int>(i);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (comp_of[static_cast<size_t>(v)] == -1)
      throw std::invalid_argument("assemble: factor does not span vertex " + std::to_string(v));

  // Group components joined by lifted edges.
  DisjointSets sets(static_cast<int>(comps.size()));
  for (EdgeId e : join.lifted_edges) {
    int ca = comp_of[static_cast<size_t>(g.edge(e).a)];
    int cb = comp_of[static_cast<size_t>(g.edge(e).b)];
    if (ca == cb)
      throw std::invalid_argument("assemble: lifted join edge lies inside one factor component");
    sets.unite(ca, cb);
  }

  std::map<int, std::vector<int>> groups;  // root -> component indices
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) groups[sets.find(i)].push_back(i);

  std::vector<CycleCubicTree> trees;
  std::vector<std::pair<int, std::vector<int>>> ordered(groups.begin(), groups.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.second.front() < b.second.front(); });

  for (const auto& [root, members] : ordered) {
    (void)root;
    CycleCubicTree t;
    std::vector<int> local_index(comps.size(), -1);
    for (int ci : members) {
      local_index[static_cast<size_t>(ci)] = static_cast<int>(t.members.size());
      t.members.push_back({comps[static_cast<size_t>(ci)].vertices, comps[static_cast<size_t>(ci)].kind});
      for (EdgeId e : comps[static_cast<size_t>(ci)].edges) t.internal_edges.push_back(e);
    }
    for (EdgeId e : join.lifted_edges) {
      int ca = comp_of[static_cast<size_t>(g.edge(e).a)];
      if (local_index[static_cast<size_t>(ca)] == -1) continue;
      int cb = comp_of[static_cast<size_t>(g.edge(e).b)];
      t.connector_edges.push_back(e);
      t.quotient_tree.push_back({local_index[static_cast<size_t>(ca)], local_index[static_cast<size_t>(cb)]});
    }
    std::sort(t.internal_edges.begin(), t.internal_edges.end());
    auto v = validate(g, t);
    if (!v.ok) throw std::logic_error("assemble: constructed tree invalid: " + v.violation);
    trees.push_back(std::move(t));
  }
  return trees;
}

TreeValidation validate(const Multigraph& g, const CycleCubicTree& t) {
  auto fail = [](std::string msg) { return TreeValidation{false, std::move(msg)}; };
  if (t.members.empty()) return fail("tree has no members");

  // (a) members pairwise vertex-disjoint and covering the subgraph.
  std::vector<int> member_of(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < t.members.size(); ++i) {
    if (t.members[i].vertices.empty()) return fail("(a): member " + std::to_string(i) + " empty");
    for (VertexId v : t.members[i].vertices) {
      g.check_vertex(v);
      if (member_of[static_cast<size_t>(v)] != -1)
        return fail("(a): vertex " + std::to_string(v) + " lies in two members");
      member_of[static_cast<size_t>(v)] = static_cast<int>(i);
    }
  }
  for (EdgeId e : t.internal_edges) {
    int ma = member_of[static_cast<size_t>(g.edge(e).a)];
    int mb = member_of[static_cast<size_t>(g.edge(e).b)];
    if (ma == -1 || ma != mb) return fail("(a): internal edge " + std::to_string(e) + " not inside one member");
  }
  for (EdgeId e : t.connector_edges) {
    int ma = member_of[static_cast<size_t>(g.edge(e).a)];
    int mb = member_of[static_cast<size_t>(g.edge(e).b)];
    if (ma == -1 || mb == -1) return fail("(a): connector " + std::to_string(e) + " leaves the subgraph");
    if (ma == mb) return fail("(a): connector " + std::to_string(e) + " lies inside member " + std::to_string(ma));
  }

  // Member shapes and the degree hypothesis.
  std::vector<int> internal_deg(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<int> total_deg(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<std::vector<EdgeId>> member_edges(t.members.size());
  for (EdgeId e : t.internal_edges) {
    const Edge& ed = g.edge(e);
    int w = ed.is_loop() ? 2 : 1;
    internal_deg[static_cast<size_t>(ed.a)] += w;
    internal_deg[static_cast<size_t>(ed.b)] += ed.is_loop() ? 0 : 1;
    total_deg[static_cast<size_t>(ed.a)] += w;
    total_deg[static_cast<size_t>(ed.b)] += ed.is_loop() ? 0 : 1;
    member_edges[static_cast<size_t>(member_of[static_cast<size_t>(ed.a)])].push_back(e);
  }
  std::vector<int> tree_degree(t.members.size(), 0);
  for (EdgeId e : t.connector_edges) {
    ++total_deg[static_cast<size_t>(g.edge(e).a)];
    ++total_deg[static_cast<size_t>(g.edge(e).b)];
    ++tree_degree[static_cast<size_t>(member_of[static_cast<size_t>(g.edge(e).a)])];
    ++tree_degree[static_cast<size_t>(member_of[static_cast<size_t>(g.edge(e).b)])];
  }
  for (size_t v = 0; v < total_deg.size(); ++v)
    if (member_of[v] != -1 && total_deg[v] > 5)
      return fail("degree hypothesis: vertex " + std::to_string(v) + " has degree " +
                  std::to_string(total_deg[v]) + " > 5");

  for (size_t i = 0; i < t.members.size(); ++i) {
    const TreeMember& m = t.members[i];
    bool cyclic = m.kind != MemberKind::Cubic;
    int want = cyclic ? 2 : 3;
    for (VertexId v : m.vertices)
      if (internal_deg[static_cast<size_t>(v)] != want)
        return fail("member " + std::to_string(i) + " (" + member_kind_name(m.kind) + "): vertex " +
                    std::to_string(v) + " has internal degree " +
                    std::to_string(internal_deg[static_cast<size_t>(v)]));
    // Connectivity of the member subgraph.
    DisjointSets ds(static_cast<int>(m.vertices.size()));
    std::map<VertexId, int> local;
    for (size_t j = 0; j < m.vertices.size(); ++j) local[m.vertices[j]] = static_cast<int>(j);
    int joins = 0;
    for (EdgeId e : member_edges[i])
      if (!g.edge(e).is_loop() && ds.unite(local[g.edge(e).a], local[g.edge(e).b])) ++joins;
    if (joins != static_cast<int>(m.vertices.size()) - 1)
      return fail("member " + std::to_string(i) + " is not connected");
    if (cyclic) {
      bool odd_len = (member_edges[i].size() % 2) == 1;
      if (odd_len != (m.kind == MemberKind::OddCycle))
        return fail("member " + std::to_string(i) + ": cycle parity does not match kind " +
                    member_kind_name(m.kind));
    }
  }

  // (b) contracting members yields quotient_tree, and it is a tree.
  if (t.quotient_tree.size() != t.connector_edges.size())
    return fail("(b): quotient_tree and connector_edges differ in length");
  for (size_t i = 0; i < t.connector_edges.size(); ++i) {
    EdgeId e = t.connector_edges[i];
    int ma = member_of[static_cast<size_t>(g.edge(e).a)];
    int mb = member_of[static_cast<size_t>(g.edge(e).b)];
    auto [qa, qb] = t.quotient_tree[i];
    if (std::minmax(ma, mb) != std::minmax(qa, qb))
      return fail("(b): quotient_tree entry " + std::to_string(i) + " does not match its connector");
  }
  if (t.connector_edges.size() != t.members.size() - 1)
    return fail("(b): contraction has " + std::to_string(t.connector_edges.size()) +
                " edges over " + std::to_string(t.members.size()) + " members, not a tree");
  DisjointSets ds(static_cast<int>(t.members.size()));
  for (auto [qa, qb] : t.quotient_tree)
    if (!ds.unite(qa, qb)) return fail("(b): contraction contains a cycle");

  // (c) parity of the member's tree degree against its kind.
  for (size_t i = 0; i < t.members.size(); ++i) {
    bool even_degree = tree_degree[i] % 2 == 0;
    bool wants_even = t.members[i].kind != MemberKind::OddCycle;
    if (even_degree != wants_even)
      return fail("(c): member " + std::to_string(i) + " (" + member_kind_name(t.members[i].kind) +
                  ") has tree degree " + std::to_string(tree_degree[i]));
  }
  return {};
}

}  // namespace zsflow
