#pragma once

#include <string>
#include <vector>

#include "shidist/region.hpp"

namespace shidist {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  int n = 0;  // n for theorem_suite, n_max for conjecture_suite
  std::vector<Check> checks;

  bool all_pass() const;
};

// Exact integer identities that are theorems:
//   eq_n = (n+1)^(n-2) and (n <= 5) eq_n = edge-labeled class count,
//   gt_n = lt0 part of the tree-poset partition,
//   sorted parking partition majorizes sorted tree-poset partition,
//   order lemmas gt = lt >= eq, lt0 >= max(between, gt1),
//   disj >= on_v1 = on_v2, partition sums, and (n <= 5) agreement of the
//   two dist-table routes. The optional pointer supplies precomputed
//   geometric regions for the route check. Requires 2 <= n <= 7.
VerificationReport theorem_suite(int n, const std::vector<Region>* geometric_regions = nullptr);

// Conjecture evidence for every n in 2..n_max (n_max <= 7): smallest
// parts of the spanning-tree and tree-poset partitions agree, sorted
// spanning-tree partition majorizes sorted tree-poset partition, and all
// rows Dist_n(k, .) are unimodal. A failing check is evidence against the
// conjecture, not an error; the detail carries the counterexample.
VerificationReport conjecture_suite(int n_max);

}  // namespace shidist
