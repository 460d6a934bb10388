#include "zsflow/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace zsflow {

namespace {

// Static edge order: repeatedly take the edge whose endpoints have the
// fewest unordered incident edges left, so vertices close as early as
// possible and their zero-sum constraint bites.
std::vector<EdgeId> closing_order(const Multigraph& g) {
  std::vector<int> remaining(static_cast<size_t>(g.vertex_count()), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) remaining[static_cast<size_t>(v)] = g.degree(v);
  std::vector<char> placed(static_cast<size_t>(g.edge_count()), 0);
  std::vector<EdgeId> order;
  order.reserve(static_cast<size_t>(g.edge_count()));
  for (int step = 0; step < g.edge_count(); ++step) {
    EdgeId best = -1;
    int best_lo = 0, best_hi = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (placed[static_cast<size_t>(e)]) continue;
      int ra = remaining[static_cast<size_t>(g.edge(e).a)];
      int rb = remaining[static_cast<size_t>(g.edge(e).b)];
      int lo = std::min(ra, rb), hi = std::max(ra, rb);
      if (best == -1 || lo < best_lo || (lo == best_lo && hi < best_hi)) {
        best = e;
        best_lo = lo;
        best_hi = hi;
      }
    }
    placed[static_cast<size_t>(best)] = 1;
    order.push_back(best);
    int w = g.edge(best).is_loop() ? 2 : 1;
    remaining[static_cast<size_t>(g.edge(best).a)] -= w;
    remaining[static_cast<size_t>(g.edge(best).b)] -= g.edge(best).is_loop() ? 0 : 1;
  }
  return order;
}

class FlowSearch {
public:
  FlowSearch(const Multigraph& g, int k, long long budget)
      : g_(g),
        k_(k),
        budget_(budget),
        order_(closing_order(g)),
        value_(static_cast<size_t>(g.edge_count()), 0),
        sum_(static_cast<size_t>(g.vertex_count()), 0),
        open_(static_cast<size_t>(g.vertex_count()), 0) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) open_[static_cast<size_t>(v)] = g.degree(v);
    // Balanced candidate order: small magnitudes first, alternating sign.
    for (int m = 1; m <= k - 1; ++m) {
      candidates_.push_back(m);
      candidates_.push_back(-m);
    }
  }

  OracleOutcome run() {
    OracleOutcome out;
    bool ok = dfs(0);
    out.nodes_explored = nodes_;
    out.budget_exhausted = exhausted_;
    if (ok) {
      EdgeLabeling f;
      f.values = value_;
      out.labeling = std::move(f);
    }
    return out;
  }

private:
  bool feasible(VertexId v) const {
    long long slack = static_cast<long long>(open_[static_cast<size_t>(v)]) * (k_ - 1);
    long long s = sum_[static_cast<size_t>(v)];
    return s <= slack && s >= -slack;
  }

  bool place(EdgeId e, int val) {
    const Edge& ed = g_.edge(e);
    value_[static_cast<size_t>(e)] = val;
    if (ed.is_loop()) {
      sum_[static_cast<size_t>(ed.a)] += 2 * val;
      open_[static_cast<size_t>(ed.a)] -= 2;
      return feasible(ed.a);
    }
    sum_[static_cast<size_t>(ed.a)] += val;
    sum_[static_cast<size_t>(ed.b)] += val;
    --open_[static_cast<size_t>(ed.a)];
    --open_[static_cast<size_t>(ed.b)];
    return feasible(ed.a) && feasible(ed.b);
  }

  void unplace(EdgeId e) {
    const Edge& ed = g_.edge(e);
    int val = value_[static_cast<size_t>(e)];
    value_[static_cast<size_t>(e)] = 0;
    if (ed.is_loop()) {
      sum_[static_cast<size_t>(ed.a)] -= 2 * val;
      open_[static_cast<size_t>(ed.a)] += 2;
      return;
    }
    sum_[static_cast<size_t>(ed.a)] -= val;
    sum_[static_cast<size_t>(ed.b)] -= val;
    ++open_[static_cast<size_t>(ed.a)];
    ++open_[static_cast<size_t>(ed.b)];
  }

  bool value_allowed(int v) const { return v != 0 && v <= k_ - 1 && v >= -(k_ - 1); }

  bool dfs(size_t pos) {
    if (exhausted_) return false;
    if (pos == order_.size()) {
      for (VertexId v = 0; v < g_.vertex_count(); ++v)
        if (sum_[static_cast<size_t>(v)] != 0) return false;
      return true;
    }
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    EdgeId e = order_[pos];
    const Edge& ed = g_.edge(e);

    // Forced value when this is the last open edge at an endpoint.
    int forced = 0;
    bool have_forced = false;
    if (ed.is_loop() && open_[static_cast<size_t>(ed.a)] == 2) {
      long long need = -sum_[static_cast<size_t>(ed.a)];
      if (need % 2 != 0) return false;
      forced = static_cast<int>(need / 2);
      have_forced = true;
    } else if (!ed.is_loop()) {
      if (open_[static_cast<size_t>(ed.a)] == 1) {
        forced = static_cast<int>(-sum_[static_cast<size_t>(ed.a)]);
        have_forced = true;
      }
      if (open_[static_cast<size_t>(ed.b)] == 1) {
        int fb = static_cast<int>(-sum_[static_cast<size_t>(ed.b)]);
        if (have_forced && fb != forced) return false;
        forced = fb;
        have_forced = true;
      }
    }

    if (have_forced) {
      if (!value_allowed(forced)) return false;
      if (place(e, forced) && dfs(pos + 1)) return true;
      unplace(e);
      return false;
    }
    for (int val : candidates_) {
      if (place(e, val) && dfs(pos + 1)) return true;
      unplace(e);
      if (exhausted_) return false;
    }
    return false;
  }

  const Multigraph& g_;
  int k_;
  long long budget_;
  std::vector<EdgeId> order_;
  std::vector<int> candidates_;
  std::vector<int> value_;
  std::vector<long long> sum_;
  std::vector<int> open_;
  long long nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

OracleOutcome brute_force_flow(const Multigraph& g, int k, long long node_budget) {
  if (k < 2) throw std::invalid_argument("brute_force_flow: k must be at least 2");
  if (g.edge_count() == 0) {
    OracleOutcome out;
    out.labeling = EdgeLabeling{};
    return out;
  }
  FlowSearch search(g, k, node_budget);
  return search.run();
}

}  // namespace zsflow
