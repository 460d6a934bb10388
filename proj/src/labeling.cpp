#include "zsflow/labeling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace zsflow {

namespace {

struct BfsTree {
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<int> depth;
};

BfsTree bfs_tree(const Multigraph& g, VertexId root) {
  BfsTree t;
  t.parent.assign(static_cast<size_t>(g.vertex_count()), -1);
  t.parent_edge.assign(static_cast<size_t>(g.vertex_count()), -1);
  t.depth.assign(static_cast<size_t>(g.vertex_count()), -1);
  std::queue<VertexId> q;
  q.push(root);
  t.depth[static_cast<size_t>(root)] = 0;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (EdgeId e : g.incident_edges(v)) {
      VertexId w = g.edge(e).other(v);
      if (t.depth[static_cast<size_t>(w)] != -1) continue;
      t.depth[static_cast<size_t>(w)] = t.depth[static_cast<size_t>(v)] + 1;
      t.parent[static_cast<size_t>(w)] = v;
      t.parent_edge[static_cast<size_t>(w)] = e;
      q.push(w);
    }
  }
  return t;
}

}  // namespace

PathPairing pair_paths(const Multigraph& g, std::vector<VertexId> endpoints) {
  if (endpoints.size() % 2 != 0) throw std::invalid_argument("pair_paths: endpoint set has odd size");
  std::sort(endpoints.begin(), endpoints.end());
  for (size_t i = 0; i < endpoints.size(); ++i) {
    g.check_vertex(endpoints[i]);
    if (i > 0 && endpoints[i] == endpoints[i - 1])
      throw std::invalid_argument("pair_paths: duplicate endpoint");
  }
  if (g.vertex_count() == 0) return {};

  BfsTree tree = bfs_tree(g, 0);
  for (int d : tree.depth)
    if (d == -1) throw std::invalid_argument("pair_paths: graph disconnected");

  // Symmetric difference of the fundamental tree paths of sorted pairs.
  // The result is a forest inside the tree whose odd-degree vertices are
  // exactly the endpoint set.
  std::vector<char> in_forest(static_cast<size_t>(g.vertex_count()), 0);  // keyed by child vertex
  for (size_t i = 0; i + 1 < endpoints.size(); i += 2) {
    VertexId a = endpoints[i], b = endpoints[i + 1];
    while (a != b) {
      if (tree.depth[static_cast<size_t>(a)] < tree.depth[static_cast<size_t>(b)]) std::swap(a, b);
      in_forest[static_cast<size_t>(a)] ^= 1;
      a = tree.parent[static_cast<size_t>(a)];
    }
  }

  std::vector<std::vector<EdgeId>> adj(static_cast<size_t>(g.vertex_count()));
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
  int forest_edges = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!in_forest[static_cast<size_t>(v)]) continue;
    EdgeId e = tree.parent_edge[static_cast<size_t>(v)];
    adj[static_cast<size_t>(v)].push_back(e);
    adj[static_cast<size_t>(tree.parent[static_cast<size_t>(v)])].push_back(e);
    ++deg[static_cast<size_t>(v)];
    ++deg[static_cast<size_t>(tree.parent[static_cast<size_t>(v)])];
    ++forest_edges;
  }
  for (auto& lst : adj) std::sort(lst.begin(), lst.end());

  std::vector<char> pending(static_cast<size_t>(g.vertex_count()), 0);
  for (VertexId v : endpoints) pending[static_cast<size_t>(v)] = 1;

  std::vector<char> used(static_cast<size_t>(g.edge_count()), 0);
  auto next_edge = [&](VertexId v) -> EdgeId {
    for (EdgeId e : adj[static_cast<size_t>(v)])
      if (!used[static_cast<size_t>(e)]) return e;
    return -1;
  };

  // Peel paths off the forest: walk from a pending leaf to the first
  // pending vertex met, remove, repeat. Forest walks are vertex-simple.
  PathPairing out;
  while (forest_edges > 0) {
    VertexId start = -1;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (deg[static_cast<size_t>(v)] == 1 && pending[static_cast<size_t>(v)]) {
        start = v;
        break;
      }
    if (start == -1) throw std::logic_error("pair_paths: forest leaf is not an endpoint");

    PathPairing::Path path;
    path.vertices.push_back(start);
    VertexId v = start;
    while (true) {
      EdgeId e = next_edge(v);
      if (e == -1) throw std::logic_error("pair_paths: walk ran out of edges");
      used[static_cast<size_t>(e)] = 1;
      --deg[static_cast<size_t>(v)];
      VertexId w = g.edge(e).other(v);
      --deg[static_cast<size_t>(w)];
      --forest_edges;
      path.edges.push_back(e);
      path.vertices.push_back(w);
      if (pending[static_cast<size_t>(w)]) break;
      v = w;
    }
    pending[static_cast<size_t>(start)] = 0;
    pending[static_cast<size_t>(path.vertices.back())] = 0;
    out.paths.push_back(std::move(path));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (pending[static_cast<size_t>(v)])
      throw std::logic_error("pair_paths: endpoint " + std::to_string(v) + " left unpaired");

  // The construction guarantees simplicity; assert it regardless.
  for (const auto& p : out.paths) {
    std::vector<VertexId> vs = p.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      throw std::logic_error("pair_paths: produced a non-simple path");
  }
  return out;
}

std::vector<int> label_even_cycle(const CycleComponent& c, int start_value) {
  if (start_value != 4 && start_value != 5)
    throw std::invalid_argument("label_even_cycle: start value must be 4 or 5");
  size_t len = c.edges.size();
  if (len < 2 || len % 2 != 0 || c.vertices.size() != len)
    throw std::invalid_argument("label_even_cycle: not an even cycle");
  std::vector<int> out(len);
  for (size_t i = 0; i < len; ++i) out[i] = (i % 2 == 0) ? start_value : 9 - start_value;
  return out;
}

std::vector<int> label_cubic(const Multigraph& g, const CubicComponent& r) {
  std::map<VertexId, int> deg;
  for (VertexId v : r.vertices) deg[v] = 0;
  for (EdgeId e : r.edges) {
    const Edge& ed = g.edge(e);
    auto ia = deg.find(ed.a), ib = deg.find(ed.b);
    if (ia == deg.end() || ib == deg.end())
      throw std::invalid_argument("label_cubic: edge leaves the component");
    ++ia->second;
    ++ib->second;
  }
  for (auto& [v, d] : deg)
    if (d != 3)
      throw std::invalid_argument("label_cubic: vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(d) + ", not 3-regular");
  return std::vector<int>(r.edges.size(), 2);
}

std::vector<int> label_odd_cycle_from_anchor(const CycleComponent& c, VertexId anchor,
                                             int anchor_value) {
  if (anchor_value != 4 && anchor_value != 5)
    throw std::invalid_argument("label_odd_cycle_from_anchor: value must be 4 or 5");
  size_t len = c.edges.size();
  if (len % 2 != 1 || c.vertices.size() != len)
    throw std::invalid_argument("label_odd_cycle_from_anchor: not an odd cycle");
  auto it = std::find(c.vertices.begin(), c.vertices.end(), anchor);
  if (it == c.vertices.end())
    throw std::invalid_argument("label_odd_cycle_from_anchor: anchor not on the cycle");
  size_t p = static_cast<size_t>(it - c.vertices.begin());
  std::vector<int> out(len);
  for (size_t i = 0; i < len; ++i)
    out[(p + i) % len] = (i % 2 == 0) ? anchor_value : 9 - anchor_value;
  return out;
}

// ---------------------------------------------------------------------------
// Recursive tree labeler.
//
// The recursion rewrites the tree through intermediate instances: vertices
// are deleted, cycles shrink (possibly to a loop), cubic members dissolve
// into parity gadgets, and cut vertices split the tree. Each instance keeps
// a per-edge map back to its parent so labels flow back up; gadget edges of
// a child always come first in its edge list.
// ---------------------------------------------------------------------------

namespace {

struct Instance {
  Multigraph graph;               // loops permitted in intermediate stages
  std::vector<int> member_of;     // vertex -> member
  std::vector<MemberKind> kinds;  // member -> kind
};

struct Depth {
  int current = 0;
  int limit = 0;
};

CycleCubicTree tree_view(const Instance& inst) {
  CycleCubicTree t;
  t.members.resize(inst.kinds.size());
  for (size_t m = 0; m < inst.kinds.size(); ++m) t.members[m].kind = inst.kinds[m];
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) {
    int m = inst.member_of[static_cast<size_t>(v)];
    if (m < 0 || m >= static_cast<int>(inst.kinds.size()))
      throw std::logic_error("label_cycle_cubic_tree: vertex without a member");
    t.members[static_cast<size_t>(m)].vertices.push_back(v);
  }
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
    int ma = inst.member_of[static_cast<size_t>(inst.graph.edge(e).a)];
    int mb = inst.member_of[static_cast<size_t>(inst.graph.edge(e).b)];
    if (ma == mb) {
      t.internal_edges.push_back(e);
    } else {
      t.connector_edges.push_back(e);
      t.quotient_tree.push_back({ma, mb});
    }
  }
  return t;
}

// Cyclic walk of a cycle member's internal edges from `start`, smaller edge
// id first. A single-vertex loop member walks to itself.
CycleComponent walk_cycle(const Multigraph& g, const std::vector<EdgeId>& cycle_edges,
                          VertexId start) {
  CycleComponent out;
  if (cycle_edges.size() == 1 && g.edge(cycle_edges[0]).is_loop()) {
    out.vertices = {start};
    out.edges = {cycle_edges[0]};
    out.odd = true;
    return out;
  }
  std::map<VertexId, std::vector<EdgeId>> inc;
  for (EdgeId e : cycle_edges) {
    inc[g.edge(e).a].push_back(e);
    inc[g.edge(e).b].push_back(e);
  }
  for (auto& [v, lst] : inc) std::sort(lst.begin(), lst.end());
  VertexId v = start;
  EdgeId e = inc.at(start)[0];
  do {
    out.vertices.push_back(v);
    out.edges.push_back(e);
    VertexId w = g.edge(e).other(v);
    const auto& we = inc.at(w);
    e = (we[0] == e) ? we[1] : we[0];
    v = w;
  } while (v != start);
  out.odd = out.edges.size() % 2 == 1;
  return out;
}

struct ChildGraph {
  std::vector<int> vmap;  // parent vertex -> child vertex or -1
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<EdgeId> parent_edge;  // aligned; -1 marks a gadget edge
};

ChildGraph start_child(const Instance& inst, const std::vector<char>& keep, int gadget_vertices) {
  ChildGraph c;
  c.vmap.assign(static_cast<size_t>(inst.graph.vertex_count()), -1);
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
    if (keep[static_cast<size_t>(v)]) c.vmap[static_cast<size_t>(v)] = c.vertex_count++;
  c.vertex_count += gadget_vertices;
  return c;
}

void add_gadget_edge(ChildGraph& c, int a, int b) {
  c.edges.push_back({a, b});
  c.parent_edge.push_back(-1);
}

// Copies surviving parent edges in id order. `rewire` overrides child
// endpoints for edges whose parent endpoints were split.
void inherit_edges(ChildGraph& c, const Instance& inst, const std::vector<char>& drop_edge,
                   const std::map<EdgeId, Edge>& rewire) {
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
    if (!drop_edge.empty() && drop_edge[static_cast<size_t>(e)]) continue;
    auto rw = rewire.find(e);
    if (rw != rewire.end()) {
      c.edges.push_back(rw->second);
      c.parent_edge.push_back(e);
      continue;
    }
    int a = c.vmap[static_cast<size_t>(inst.graph.edge(e).a)];
    int b = c.vmap[static_cast<size_t>(inst.graph.edge(e).b)];
    if (a == -1 || b == -1) continue;
    c.edges.push_back({a, b});
    c.parent_edge.push_back(e);
  }
}

void scatter(std::vector<int>& out, const std::vector<int>& child_labels,
             const std::vector<EdgeId>& parent_edge) {
  for (size_t i = 0; i < parent_edge.size(); ++i)
    if (parent_edge[i] >= 0) out[static_cast<size_t>(parent_edge[i])] = child_labels[i];
}

// Maps surviving parent members to compact child ids in parent order.
// Returns the translation; kinds are appended to child_kinds.
std::vector<int> compact_members(const Instance& inst, const std::vector<char>& member_survives,
                                 std::vector<MemberKind>& child_kinds) {
  std::vector<int> mmap(inst.kinds.size(), -1);
  for (size_t m = 0; m < inst.kinds.size(); ++m) {
    if (!member_survives[m]) continue;
    mmap[m] = static_cast<int>(child_kinds.size());
    child_kinds.push_back(inst.kinds[m]);
  }
  return mmap;
}

std::vector<int> label_components(const Instance& inst, Depth depth);

void require_value_45(int a, const char* where) {
  if (a != 4 && a != 5)
    throw std::logic_error(std::string(where) + ": recursed value " + std::to_string(a) +
                           " outside {4,5}");
}

void require_connector_value(int a, const char* where) {
  if (a != -2 && a != -4)
    throw std::logic_error(std::string(where) + ": connector value " + std::to_string(a) +
                           " outside {-2,-4}");
}

// Anchor alternation around an odd cycle member; both edges at the anchor
// take `value`.
void anchor_label_member(const Instance& inst, const std::vector<EdgeId>& member_edges,
                         VertexId anchor, int value, std::vector<int>& out) {
  CycleComponent cyc = walk_cycle(inst.graph, member_edges, anchor);
  std::vector<int> vals = label_odd_cycle_from_anchor(cyc, anchor, value);
  for (size_t i = 0; i < cyc.edges.size(); ++i)
    out[static_cast<size_t>(cyc.edges[i])] = vals[i];
}

std::vector<int> label_tree(const Instance& inst, Depth depth) {
  if (depth.current > depth.limit)
    throw std::logic_error("label_cycle_cubic_tree: recursion depth guard exceeded");

  CycleCubicTree view = tree_view(inst);
  auto valid = validate(inst.graph, view);
  if (!valid.ok)
    throw std::logic_error("label_cycle_cubic_tree: intermediate tree invalid: " + valid.violation);

  const size_t t = inst.kinds.size();
  std::vector<std::vector<EdgeId>> member_edges(t);
  for (EdgeId e : view.internal_edges)
    member_edges[static_cast<size_t>(inst.member_of[static_cast<size_t>(inst.graph.edge(e).a)])]
        .push_back(e);

  std::vector<int> out(static_cast<size_t>(inst.graph.edge_count()), 0);

  if (t == 1) {
    if (inst.kinds[0] == MemberKind::Cubic) {
      for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) out[static_cast<size_t>(e)] = 2;
      return out;
    }
    // Even cycle: 4 starts at the lowest edge id.
    CycleComponent cyc = walk_cycle(inst.graph, member_edges[0], 0);
    size_t p = static_cast<size_t>(
        std::min_element(cyc.edges.begin(), cyc.edges.end()) - cyc.edges.begin());
    std::rotate(cyc.vertices.begin(), cyc.vertices.begin() + static_cast<long>(p), cyc.vertices.end());
    std::rotate(cyc.edges.begin(), cyc.edges.begin() + static_cast<long>(p), cyc.edges.end());
    std::vector<int> vals = label_even_cycle(cyc, 4);
    for (size_t i = 0; i < cyc.edges.size(); ++i)
      out[static_cast<size_t>(cyc.edges[i])] = vals[i];
    return out;
  }

  // Pick the smallest odd-cycle leaf of the quotient tree.
  std::vector<int> tree_degree(t, 0);
  for (EdgeId e : view.connector_edges) {
    ++tree_degree[static_cast<size_t>(inst.member_of[static_cast<size_t>(inst.graph.edge(e).a)])];
    ++tree_degree[static_cast<size_t>(inst.member_of[static_cast<size_t>(inst.graph.edge(e).b)])];
  }
  int r1 = -1;
  for (size_t m = 0; m < t; ++m)
    if (inst.kinds[m] == MemberKind::OddCycle && tree_degree[m] == 1) {
      r1 = static_cast<int>(m);
      break;
    }
  if (r1 == -1) throw std::logic_error("label_cycle_cubic_tree: no odd-cycle leaf in tree");

  EdgeId connector = -1;
  VertexId v1 = -1, u1 = -1;
  for (EdgeId e : view.connector_edges) {
    int ma = inst.member_of[static_cast<size_t>(inst.graph.edge(e).a)];
    int mb = inst.member_of[static_cast<size_t>(inst.graph.edge(e).b)];
    if (ma == r1 || mb == r1) {
      connector = e;
      v1 = (ma == r1) ? inst.graph.edge(e).a : inst.graph.edge(e).b;
      u1 = inst.graph.edge(e).other(v1);
      break;
    }
  }
  const int r2 = inst.member_of[static_cast<size_t>(u1)];

  std::vector<EdgeId> u1_external;
  for (EdgeId e : inst.graph.incident_edges(u1)) {
    VertexId w = inst.graph.edge(e).other(u1);
    if (inst.member_of[static_cast<size_t>(w)] != r2 &&
        (u1_external.empty() || u1_external.back() != e))
      u1_external.push_back(e);
  }
  const size_t c = u1_external.size();

  const bool r2_is_loop =
      member_edges[static_cast<size_t>(r2)].size() == 1 &&
      inst.graph.edge(member_edges[static_cast<size_t>(r2)][0]).is_loop();

  // Two-member tree whose inner member is a loop: label directly, the
  // shrink step has nothing left to recurse on.
  if (c == 1 && r2_is_loop) {
    if (t != 2) throw std::logic_error("label_cycle_cubic_tree: loop member with one connector in a tree of size > 2");
    const int a = 4;
    out[static_cast<size_t>(member_edges[static_cast<size_t>(r2)][0])] = a;
    out[static_cast<size_t>(connector)] = 6 - 2 * a;
    anchor_label_member(inst, member_edges[static_cast<size_t>(r1)], v1, a, out);
    return out;
  }

  if (c == 1 && inst.kinds[static_cast<size_t>(r2)] != MemberKind::Cubic) {
    // Shrink: delete R1 and u1, reconnect u1's cycle neighbours, recurse.
    std::vector<EdgeId> u1_cycle;
    for (EdgeId e : inst.graph.incident_edges(u1))
      if (inst.member_of[static_cast<size_t>(inst.graph.edge(e).other(u1))] == r2 &&
          (u1_cycle.empty() || u1_cycle.back() != e))
        u1_cycle.push_back(e);
    if (u1_cycle.size() != 2)
      throw std::logic_error("label_cycle_cubic_tree: cycle vertex without two cycle edges");
    VertexId u11 = inst.graph.edge(u1_cycle[0]).other(u1);
    VertexId u12 = inst.graph.edge(u1_cycle[1]).other(u1);

    std::vector<char> keep(static_cast<size_t>(inst.graph.vertex_count()), 1);
    keep[static_cast<size_t>(u1)] = 0;
    for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
      if (inst.member_of[static_cast<size_t>(v)] == r1) keep[static_cast<size_t>(v)] = 0;

    ChildGraph cg = start_child(inst, keep, 0);
    add_gadget_edge(cg, cg.vmap[static_cast<size_t>(u11)], cg.vmap[static_cast<size_t>(u12)]);
    inherit_edges(cg, inst, {}, {});

    Instance child;
    child.graph = Multigraph::with_loops(cg.vertex_count, cg.edges);
    std::vector<char> survives(t, 1);
    survives[static_cast<size_t>(r1)] = 0;
    std::vector<int> mmap = compact_members(inst, survives, child.kinds);
    size_t new_len = member_edges[static_cast<size_t>(r2)].size() - 1;
    child.kinds[static_cast<size_t>(mmap[static_cast<size_t>(r2)])] =
        (new_len % 2 == 1) ? MemberKind::OddCycle : MemberKind::EvenCycle;
    child.member_of.assign(static_cast<size_t>(child.graph.vertex_count()), -1);
    for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
      if (cg.vmap[static_cast<size_t>(v)] != -1)
        child.member_of[static_cast<size_t>(cg.vmap[static_cast<size_t>(v)])] =
            mmap[static_cast<size_t>(inst.member_of[static_cast<size_t>(v)])];

    Depth d{depth.current + 1, depth.limit};
    std::vector<int> child_labels = label_components(child, d);

    scatter(out, child_labels, cg.parent_edge);
    int a = child_labels[0];
    require_value_45(a, "cycle shrink");
    out[static_cast<size_t>(u1_cycle[0])] = a;
    out[static_cast<size_t>(u1_cycle[1])] = a;
    out[static_cast<size_t>(connector)] = 6 - 2 * a;
    anchor_label_member(inst, member_edges[static_cast<size_t>(r1)], v1, a, out);
    return out;
  }

  if (c == 1) {
    // Cubic elimination: pair the singly-attached vertices of R2 with
    // edge-disjoint paths, replace R2 by parity gadgets keyed on path
    // length, split doubly-attached vertices, recurse on the resulting
    // union of trees, then translate the path labels back.
    const auto& r2_vertices = view.members[static_cast<size_t>(r2)].vertices;
    std::map<VertexId, std::vector<EdgeId>> externals;
    for (VertexId v : r2_vertices) {
      std::vector<EdgeId> ext;
      for (EdgeId e : inst.graph.incident_edges(v))
        if (inst.member_of[static_cast<size_t>(inst.graph.edge(e).other(v))] != r2 &&
            (ext.empty() || ext.back() != e))
          ext.push_back(e);
      if (ext.size() > 2)
        throw std::logic_error("label_cycle_cubic_tree: cubic vertex with 3 external edges");
      if (!ext.empty()) externals[v] = std::move(ext);
    }
    std::vector<VertexId> singles, doubles;
    for (const auto& [v, ext] : externals)
      (ext.size() == 1 ? singles : doubles).push_back(v);
    if (singles.size() % 2 != 0)
      throw std::logic_error("label_cycle_cubic_tree: odd number of singly-attached vertices");

    auto sub = induced_subgraph(inst.graph, r2_vertices);
    std::vector<VertexId> sub_singles;
    for (VertexId v : singles) sub_singles.push_back(sub.vertex_to_sub[static_cast<size_t>(v)]);
    PathPairing pp = pair_paths(sub.graph, sub_singles);

    struct ParentPath {
      std::vector<VertexId> vertices;
      std::vector<EdgeId> edges;
    };
    std::vector<ParentPath> paths;
    for (const auto& p : pp.paths) {
      ParentPath pp2;
      for (VertexId v : p.vertices) pp2.vertices.push_back(sub.vertex_origin[static_cast<size_t>(v)]);
      for (EdgeId e : p.edges) pp2.edges.push_back(sub.edge_origin[static_cast<size_t>(e)]);
      paths.push_back(std::move(pp2));
    }

    std::vector<char> keep(static_cast<size_t>(inst.graph.vertex_count()), 1);
    for (VertexId v : r2_vertices)
      if (!externals.count(v)) keep[static_cast<size_t>(v)] = 0;
    std::vector<char> drop_edge(static_cast<size_t>(inst.graph.edge_count()), 0);
    for (EdgeId e : member_edges[static_cast<size_t>(r2)]) drop_edge[static_cast<size_t>(e)] = 1;

    // Gadget vertices: x_i, y_i per even path, then z, x, y per split.
    int extra = 0;
    std::vector<int> even_path_base(paths.size(), -1);
    for (size_t i = 0; i < paths.size(); ++i)
      if (paths[i].edges.size() % 2 == 0) {
        even_path_base[i] = extra;
        extra += 2;
      }
    std::vector<int> split_base(doubles.size(), -1);
    for (size_t j = 0; j < doubles.size(); ++j) {
      split_base[j] = extra;
      extra += 3;
    }

    ChildGraph cg = start_child(inst, keep, extra);
    int gadget_start = 0;
    for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
      if (keep[static_cast<size_t>(v)]) ++gadget_start;

    std::map<EdgeId, Edge> rewire;
    for (size_t j = 0; j < doubles.size(); ++j) {
      const auto& ext = externals.at(doubles[j]);
      int z = gadget_start + split_base[j];
      // The larger external edge moves to the split-off vertex.
      const Edge& pe = inst.graph.edge(ext[1]);
      VertexId far = pe.other(doubles[j]);
      rewire[ext[1]] = {z, cg.vmap[static_cast<size_t>(far)]};
    }

    std::vector<size_t> path_gadget_index(paths.size(), 0);
    for (size_t i = 0; i < paths.size(); ++i) {
      int a = cg.vmap[static_cast<size_t>(paths[i].vertices.front())];
      int b = cg.vmap[static_cast<size_t>(paths[i].vertices.back())];
      path_gadget_index[i] = cg.edges.size();
      if (paths[i].edges.size() % 2 == 1) {
        add_gadget_edge(cg, a, b);
        add_gadget_edge(cg, a, b);
      } else {
        int x = gadget_start + even_path_base[i];
        int y = x + 1;
        add_gadget_edge(cg, a, x);
        add_gadget_edge(cg, x, b);
        add_gadget_edge(cg, a, y);
        add_gadget_edge(cg, y, b);
      }
    }
    std::vector<size_t> split_gadget_index(doubles.size(), 0);
    for (size_t j = 0; j < doubles.size(); ++j) {
      int w = cg.vmap[static_cast<size_t>(doubles[j])];
      int z = gadget_start + split_base[j];
      int x = z + 1, y = z + 2;
      split_gadget_index[j] = cg.edges.size();
      add_gadget_edge(cg, w, x);
      add_gadget_edge(cg, x, z);
      add_gadget_edge(cg, w, y);
      add_gadget_edge(cg, y, z);
    }
    inherit_edges(cg, inst, drop_edge, rewire);

    Instance child;
    child.graph = Multigraph::with_loops(cg.vertex_count, cg.edges);
    std::vector<char> survives(t, 1);
    survives[static_cast<size_t>(r2)] = 0;
    std::vector<int> mmap = compact_members(inst, survives, child.kinds);
    child.member_of.assign(static_cast<size_t>(child.graph.vertex_count()), -1);
    for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) {
      if (cg.vmap[static_cast<size_t>(v)] == -1) continue;
      int pm = inst.member_of[static_cast<size_t>(v)];
      if (pm != r2)
        child.member_of[static_cast<size_t>(cg.vmap[static_cast<size_t>(v)])] =
            mmap[static_cast<size_t>(pm)];
    }
    for (size_t i = 0; i < paths.size(); ++i) {
      int mid = static_cast<int>(child.kinds.size());
      child.kinds.push_back(MemberKind::EvenCycle);
      child.member_of[static_cast<size_t>(cg.vmap[static_cast<size_t>(paths[i].vertices.front())])] = mid;
      child.member_of[static_cast<size_t>(cg.vmap[static_cast<size_t>(paths[i].vertices.back())])] = mid;
      if (even_path_base[i] >= 0) {
        child.member_of[static_cast<size_t>(gadget_start + even_path_base[i])] = mid;
        child.member_of[static_cast<size_t>(gadget_start + even_path_base[i] + 1)] = mid;
      }
    }
    for (size_t j = 0; j < doubles.size(); ++j) {
      int mid = static_cast<int>(child.kinds.size());
      child.kinds.push_back(MemberKind::EvenCycle);
      child.member_of[static_cast<size_t>(cg.vmap[static_cast<size_t>(doubles[j])])] = mid;
      for (int off = 0; off < 3; ++off)
        child.member_of[static_cast<size_t>(gadget_start + split_base[j] + off)] = mid;
    }

    Depth d{depth.current + 1, depth.limit};
    std::vector<int> child_labels = label_components(child, d);
    scatter(out, child_labels, cg.parent_edge);

    // Translate: path edges alternate 1/3 keyed on the recursed connector
    // value at the path's first endpoint; the rest of R2 takes 2.
    for (size_t i = 0; i < paths.size(); ++i) {
      VertexId a = paths[i].vertices.front(), b = paths[i].vertices.back();
      int fa = out[static_cast<size_t>(externals.at(a)[0])];
      int fb = out[static_cast<size_t>(externals.at(b)[0])];
      require_connector_value(fa, "cubic elimination");
      require_connector_value(fb, "cubic elimination");
      if (paths[i].edges.size() % 2 == 1) {
        int g1 = child_labels[path_gadget_index[i]];
        int g2 = child_labels[path_gadget_index[i] + 1];
        require_value_45(g1, "cubic elimination");
        if (g1 != g2 || fa != fb)
          throw std::logic_error("label_cycle_cubic_tree: odd-path gadget values disagree");
      } else if (fa == fb) {
        throw std::logic_error("label_cycle_cubic_tree: even-path connectors must differ");
      }
      int value = (fa == -2) ? 1 : 3;
      for (size_t j = 0; j < paths[i].edges.size(); ++j) {
        out[static_cast<size_t>(paths[i].edges[j])] = value;
        value = 4 - value;
      }
    }
    for (size_t j = 0; j < doubles.size(); ++j) {
      const auto& ext = externals.at(doubles[j]);
      int f1 = out[static_cast<size_t>(ext[0])];
      int f2 = out[static_cast<size_t>(ext[1])];
      require_connector_value(f1, "vertex split");
      require_connector_value(f2, "vertex split");
      if (f1 == f2) throw std::logic_error("label_cycle_cubic_tree: split connectors must differ");
    }
    for (EdgeId e : member_edges[static_cast<size_t>(r2)])
      if (out[static_cast<size_t>(e)] == 0) out[static_cast<size_t>(e)] = 2;
    return out;
  }

  // Cut-vertex split, fused with the forced shrink at the ghost 4-cycle:
  // the branch hanging off u1 through R1 and through one more connector is
  // cut away and re-attached to a triangle gadget; the remainder keeps u1.
  EdgeId e2 = -1;
  for (EdgeId e : u1_external)
    if (e != connector) {
      e2 = e;
      break;
    }
  VertexId v2 = inst.graph.edge(e2).other(u1);
  if (inst.member_of[static_cast<size_t>(v2)] == r1 || inst.member_of[static_cast<size_t>(v2)] == r2)
    throw std::logic_error("label_cycle_cubic_tree: second cut branch re-enters R1 or R2");

  // Components of the graph minus u1.
  std::vector<int> comp(static_cast<size_t>(inst.graph.vertex_count()), -1);
  int ncomp = 0;
  for (VertexId root = 0; root < inst.graph.vertex_count(); ++root) {
    if (root == u1 || comp[static_cast<size_t>(root)] != -1) continue;
    std::vector<VertexId> stack{root};
    comp[static_cast<size_t>(root)] = ncomp;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : inst.graph.incident_edges(v)) {
        VertexId w = inst.graph.edge(e).other(v);
        if (w == u1 || comp[static_cast<size_t>(w)] != -1) continue;
        comp[static_cast<size_t>(w)] = ncomp;
        stack.push_back(w);
      }
    }
    ++ncomp;
  }
  int b1 = comp[static_cast<size_t>(v1)];
  int b2 = comp[static_cast<size_t>(v2)];
  if (b1 == b2) throw std::logic_error("label_cycle_cubic_tree: cut branches are not separated by u1");
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) {
    bool in_r1 = inst.member_of[static_cast<size_t>(v)] == r1;
    if (in_r1 != (comp[static_cast<size_t>(v)] == b1 && v != u1))
      throw std::logic_error("label_cycle_cubic_tree: R1 branch contains more than R1");
  }

  // Child A: the v2 branch plus a triangle gadget standing in for the
  // shrunk 4-cycle; the rewired e2 hangs off triangle vertex z.
  std::vector<char> keep_a(static_cast<size_t>(inst.graph.vertex_count()), 0);
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
    if (v != u1 && comp[static_cast<size_t>(v)] == b2) keep_a[static_cast<size_t>(v)] = 1;
  ChildGraph cga = start_child(inst, keep_a, 3);
  int tri = 0;
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
    if (keep_a[static_cast<size_t>(v)]) ++tri;
  int y = tri, z = tri + 1, w = tri + 2;
  add_gadget_edge(cga, y, w);  // the value read back as `a`
  add_gadget_edge(cga, y, z);
  add_gadget_edge(cga, z, w);
  std::map<EdgeId, Edge> rewire_a;
  rewire_a[e2] = {z, cga.vmap[static_cast<size_t>(v2)]};
  inherit_edges(cga, inst, {}, rewire_a);

  Instance child_a;
  child_a.graph = Multigraph::with_loops(cga.vertex_count, cga.edges);
  std::vector<char> survives_a(t, 0);
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
    if (keep_a[static_cast<size_t>(v)]) survives_a[static_cast<size_t>(inst.member_of[static_cast<size_t>(v)])] = 1;
  std::vector<int> mmap_a = compact_members(inst, survives_a, child_a.kinds);
  int tri_member = static_cast<int>(child_a.kinds.size());
  child_a.kinds.push_back(MemberKind::OddCycle);
  child_a.member_of.assign(static_cast<size_t>(child_a.graph.vertex_count()), tri_member);
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
    if (cga.vmap[static_cast<size_t>(v)] != -1)
      child_a.member_of[static_cast<size_t>(cga.vmap[static_cast<size_t>(v)])] =
          mmap_a[static_cast<size_t>(inst.member_of[static_cast<size_t>(v)])];

  // Child B: everything else, u1 included.
  std::vector<char> keep_b(static_cast<size_t>(inst.graph.vertex_count()), 0);
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
    if (v == u1 || (comp[static_cast<size_t>(v)] != b1 && comp[static_cast<size_t>(v)] != b2))
      keep_b[static_cast<size_t>(v)] = 1;
  ChildGraph cgb = start_child(inst, keep_b, 0);
  inherit_edges(cgb, inst, {}, {});
  Instance child_b;
  child_b.graph = Multigraph::with_loops(cgb.vertex_count, cgb.edges);
  std::vector<char> survives_b(t, 0);
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
    if (keep_b[static_cast<size_t>(v)]) survives_b[static_cast<size_t>(inst.member_of[static_cast<size_t>(v)])] = 1;
  std::vector<int> mmap_b = compact_members(inst, survives_b, child_b.kinds);
  child_b.member_of.assign(static_cast<size_t>(child_b.graph.vertex_count()), -1);
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
    if (cgb.vmap[static_cast<size_t>(v)] != -1)
      child_b.member_of[static_cast<size_t>(cgb.vmap[static_cast<size_t>(v)])] =
          mmap_b[static_cast<size_t>(inst.member_of[static_cast<size_t>(v)])];

  Depth d{depth.current + 1, depth.limit};
  std::vector<int> labels_a = label_components(child_a, d);
  std::vector<int> labels_b = label_components(child_b, d);
  scatter(out, labels_a, cga.parent_edge);
  scatter(out, labels_b, cgb.parent_edge);

  int a = labels_a[0];
  require_value_45(a, "cut split");
  out[static_cast<size_t>(connector)] = 6 - 2 * a;
  int fe2 = out[static_cast<size_t>(e2)];
  require_connector_value(fe2, "cut split");
  if (fe2 == out[static_cast<size_t>(connector)])
    throw std::logic_error("label_cycle_cubic_tree: cut-split connectors must differ");
  anchor_label_member(inst, member_edges[static_cast<size_t>(r1)], v1, a, out);
  return out;
}

std::vector<int> label_components(const Instance& inst, Depth depth) {
  auto comps = components(inst.graph);
  if (comps.size() == 1) return label_tree(inst, depth);
  std::vector<int> out(static_cast<size_t>(inst.graph.edge_count()), 0);
  for (const auto& cv : comps) {
    auto sub = induced_subgraph(inst.graph, cv);
    Instance si;
    si.graph = sub.graph;
    si.member_of.assign(static_cast<size_t>(si.graph.vertex_count()), -1);
    std::vector<int> mmap(inst.kinds.size(), -1);
    for (VertexId v = 0; v < si.graph.vertex_count(); ++v) {
      int pm = inst.member_of[static_cast<size_t>(sub.vertex_origin[static_cast<size_t>(v)])];
      if (mmap[static_cast<size_t>(pm)] == -1) {
        mmap[static_cast<size_t>(pm)] = static_cast<int>(si.kinds.size());
        si.kinds.push_back(inst.kinds[static_cast<size_t>(pm)]);
      }
      si.member_of[static_cast<size_t>(v)] = mmap[static_cast<size_t>(pm)];
    }
    std::vector<int> sub_labels = label_tree(si, depth);
    for (size_t i = 0; i < sub_labels.size(); ++i)
      out[static_cast<size_t>(sub.edge_origin[i])] = sub_labels[i];
  }
  return out;
}

}  // namespace

EdgeLabeling label_cycle_cubic_tree(const Multigraph& g, const CycleCubicTree& t) {
  auto valid = validate(g, t);
  if (!valid.ok)
    throw std::invalid_argument("label_cycle_cubic_tree: invalid tree: " + valid.violation);

  // Project the tree into a compact instance.
  std::vector<VertexId> verts;
  for (const auto& m : t.members)
    for (VertexId v : m.vertices) verts.push_back(v);
  std::sort(verts.begin(), verts.end());

  std::vector<int> vmap(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < verts.size(); ++i) vmap[static_cast<size_t>(verts[i])] = static_cast<int>(i);

  std::vector<EdgeId> tree_edges = t.internal_edges;
  tree_edges.insert(tree_edges.end(), t.connector_edges.begin(), t.connector_edges.end());
  std::sort(tree_edges.begin(), tree_edges.end());

  Instance inst;
  std::vector<Edge> edges;
  for (EdgeId e : tree_edges)
    edges.push_back({vmap[static_cast<size_t>(g.edge(e).a)], vmap[static_cast<size_t>(g.edge(e).b)]});
  inst.graph = Multigraph::with_loops(static_cast<int>(verts.size()), std::move(edges));
  inst.member_of.assign(verts.size(), -1);
  for (size_t m = 0; m < t.members.size(); ++m) {
    inst.kinds.push_back(t.members[m].kind);
    for (VertexId v : t.members[m].vertices)
      inst.member_of[static_cast<size_t>(vmap[static_cast<size_t>(v)])] = static_cast<int>(m);
  }

  Depth depth{0, std::max(8, 4 * inst.graph.edge_count())};
  std::vector<int> labels = label_components(inst, depth);

  EdgeLabeling result;
  result.values.assign(static_cast<size_t>(g.edge_count()), 0);
  for (size_t i = 0; i < tree_edges.size(); ++i)
    result.values[static_cast<size_t>(tree_edges[i])] = labels[i];

  auto check = check_label_constraints(g, t, result);
  if (!check.ok)
    throw std::logic_error("label_cycle_cubic_tree: produced labeling violates constraints: " +
                           check.violation);
  return result;
}

LabelCheck check_label_constraints(const Multigraph& g, const CycleCubicTree& t,
                                   const EdgeLabeling& f) {
  auto fail = [](std::string msg) { return LabelCheck{false, std::move(msg)}; };
  if (f.values.size() != static_cast<size_t>(g.edge_count()))
    return fail("labeling not aligned with the host edge list");

  std::vector<int> member_of(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < t.members.size(); ++i)
    for (VertexId v : t.members[i].vertices) member_of[static_cast<size_t>(v)] = static_cast<int>(i);

  std::vector<long long> sum(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
  auto account = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    sum[static_cast<size_t>(ed.a)] += f[e];
    sum[static_cast<size_t>(ed.b)] += f[e];
    ++deg[static_cast<size_t>(ed.a)];
    ++deg[static_cast<size_t>(ed.b)];
  };

  for (EdgeId e : t.internal_edges) {
    int m = member_of[static_cast<size_t>(g.edge(e).a)];
    bool cyclic = t.members[static_cast<size_t>(m)].kind != MemberKind::Cubic;
    if (cyclic && !LabelTarget::cycle_value(f[e]))
      return fail("cycle edge " + std::to_string(e) + " labeled " + std::to_string(f[e]));
    if (!cyclic && !LabelTarget::cubic_value(f[e]))
      return fail("cubic edge " + std::to_string(e) + " labeled " + std::to_string(f[e]));
    account(e);
  }
  for (EdgeId e : t.connector_edges) {
    if (!LabelTarget::connector_value(f[e]))
      return fail("connector edge " + std::to_string(e) + " labeled " + std::to_string(f[e]));
    account(e);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (member_of[static_cast<size_t>(v)] == -1) continue;
    if (!LabelTarget::degree_in_range(deg[static_cast<size_t>(v)]))
      return fail("vertex " + std::to_string(v) + " has tree degree " +
                  std::to_string(deg[static_cast<size_t>(v)]));
    if (sum[static_cast<size_t>(v)] != LabelTarget::required_sum(deg[static_cast<size_t>(v)]))
      return fail("vertex " + std::to_string(v) + " of degree " +
                  std::to_string(deg[static_cast<size_t>(v)]) + " sums to " +
                  std::to_string(sum[static_cast<size_t>(v)]) + ", expected " +
                  std::to_string(LabelTarget::required_sum(deg[static_cast<size_t>(v)])));
  }
  return {};
}

}  // namespace zsflow
