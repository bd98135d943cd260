#include "shidist/tree_poset.hpp"

#include <stdexcept>

namespace shidist {

int TreePoset::forward_arc_count() const {
  int c = 0;
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (less(u, v)) ++c;
    }
  }
  return c;
}

int TreePoset::backward_arc_count() const {
  int c = 0;
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (less(v, u)) ++c;
    }
  }
  return c;
}

bool TreePoset::is_transitive() const {
  for (int a = 1; a <= n_; ++a) {
    for (int b = 1; b <= n_; ++b) {
      if (a == b || !less(a, b)) continue;
      for (int c = 1; c <= n_; ++c) {
        if (c == a || c == b) continue;
        if (less(b, c) && !less(a, c)) return false;
      }
    }
  }
  return true;
}

TreePoset tree_poset_from_states(int n, const std::vector<PairState>& states) {
  TreePoset tp(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      switch (states[pair_index(n, i, j)]) {
        case PairState::LT0: tp.set_less(i, j); break;
        case PairState::GT1: tp.set_less(j, i); break;
        case PairState::Between: break;
      }
    }
  }
  return tp;
}

TreePoset region_to_tree_poset(const Region& r) {
  TreePoset tp = tree_poset_from_states(r.n, r.states);
  if (!tp.is_transitive()) {
    throw std::logic_error("region_to_tree_poset: arc relation of a feasible region must be transitive");
  }
  return tp;
}

Permutation canonical_linear_extension(const TreePoset& tp) {
  const int n = tp.size();
  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> emitted(n + 1, false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 1; v <= n; ++v) {
      if (emitted[v]) continue;
      bool minimal = true;
      for (int u = 1; u <= n; ++u) {
        if (!emitted[u] && tp.less(u, v)) {
          minimal = false;
          break;
        }
      }
      if (minimal && v > pick) pick = v;
    }
    if (pick < 0) throw std::logic_error("canonical_linear_extension: relation has a cycle");
    emitted[pick] = true;
    order.push_back(pick);
  }
  return Permutation(order);
}

}  // namespace shidist
