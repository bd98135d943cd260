#pragma once

#include <vector>

#include "shidist/region.hpp"

namespace shidist {

// Difference-constraint system of a state assignment: a directed edge
// (from, to, bound) means x_to - x_from < bound. Strictness is handled
// with exact scaled integer weights W = bound * (E + 1) - 1: a cycle with
// bound sum <= 0 (infeasible) scales to a strictly negative cycle, one
// with bound sum >= 1 stays positive.
struct ConstraintGraph {
  struct Edge {
    int from = 0, to = 0;
    int bound = 0;  // in {-1, 0, 1}
  };

  int n = 0;
  std::vector<Edge> edges;

  static ConstraintGraph from_states(int n, const std::vector<PairState>& states);

  long long scaled_weight(const Edge& e) const {
    return static_cast<long long>(e.bound) * (static_cast<long long>(edges.size()) + 1) - 1;
  }

  // Bellman-Ford negative-cycle detection on the scaled weights.
  bool has_infeasible_cycle() const;
};

// True iff real values x_1..x_n satisfy every strict pair condition.
// Throws std::invalid_argument when states does not cover all pairs.
bool is_feasible(int n, const std::vector<PairState>& states);
bool is_feasible(const Region& r);

}  // namespace shidist
