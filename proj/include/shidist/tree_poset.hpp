#pragma once

#include <vector>

#include "shidist/permutation.hpp"
#include "shidist/region.hpp"

namespace shidist {

// Poset on [n] read off a region: LT0 on (i,j) gives the forward arc
// i < j, GT1 gives the backward arc j < i, Between leaves the pair
// incomparable.
class TreePoset {
 public:
  explicit TreePoset(int n) : n_(n), less_(static_cast<std::size_t>(n + 1) * (n + 1), false) {}

  int size() const { return n_; }
  bool less(int u, int v) const { return less_[u * (n_ + 1) + v]; }
  void set_less(int u, int v) { less_[u * (n_ + 1) + v] = true; }
  bool incomparable(int u, int v) const { return !less(u, v) && !less(v, u); }

  int forward_arc_count() const;   // arcs u < v with u numerically smaller
  int backward_arc_count() const;  // arcs u < v with u numerically larger
  bool is_transitive() const;

  bool operator==(const TreePoset&) const = default;

 private:
  int n_;
  std::vector<bool> less_;
};

// No transitivity requirement; used to inspect arbitrary assignments.
TreePoset tree_poset_from_states(int n, const std::vector<PairState>& states);

// Verifies transitivity; throws std::logic_error if it fails (cannot
// happen for a feasible region).
TreePoset region_to_tree_poset(const Region& r);

// Linear extension emitting, among the minimal not-yet-emitted vertices,
// the largest-numbered one first.
Permutation canonical_linear_extension(const TreePoset& tp);

}  // namespace shidist
