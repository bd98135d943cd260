#include "shidist/feasibility.hpp"

#include <stdexcept>

namespace shidist {

ConstraintGraph ConstraintGraph::from_states(int n, const std::vector<PairState>& states) {
  ConstraintGraph g;
  g.n = n;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      switch (states[pair_index(n, i, j)]) {
        case PairState::LT0:  // x_i - x_j < 0
          g.edges.push_back({j, i, 0});
          break;
        case PairState::Between:  // x_j - x_i < 0 and x_i - x_j < 1
          g.edges.push_back({i, j, 0});
          g.edges.push_back({j, i, 1});
          break;
        case PairState::GT1:  // x_j - x_i < -1
          g.edges.push_back({i, j, -1});
          break;
      }
    }
  }
  return g;
}

bool ConstraintGraph::has_infeasible_cycle() const {
  // All-zero start acts as a virtual source reaching every vertex.
  std::vector<long long> dist(n + 1, 0);
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const Edge& e : edges) {
      const long long cand = dist[e.from] + scaled_weight(e);
      if (cand < dist[e.to]) {
        dist[e.to] = cand;
        changed = true;
      }
    }
    if (!changed) return false;
  }
  return true;  // still relaxing after n rounds
}

bool is_feasible(int n, const std::vector<PairState>& states) {
  if (static_cast<int>(states.size()) != pair_count(n)) {
    throw std::invalid_argument("is_feasible: expected one state per pair");
  }
  return !ConstraintGraph::from_states(n, states).has_infeasible_cycle();
}

bool is_feasible(const Region& r) { return is_feasible(r.n, r.states); }

}  // namespace shidist
