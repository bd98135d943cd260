#pragma once

#include <array>
#include <string>
#include <vector>

namespace shidist {

// A labeled 3-part composition of (n+1)^(n-1).
struct Partition3 {
  int n = 0;
  std::array<std::string, 3> labels;
  std::array<long long, 3> parts{};

  long long sum() const { return parts[0] + parts[1] + parts[2]; }
  std::array<long long, 3> sorted_desc() const;
  std::vector<long long> sorted_desc_vec() const;
  long long largest() const;
  long long smallest() const;

  std::string str() const;  // "gt=50 eq=25 lt=50"
};

// Parking functions split by a_i > a_j / a_i = a_j / a_i < a_j. The counts
// do not depend on the chosen indices. Requires n >= 2, i != j.
Partition3 parking_partition(int n, int i = 1, int j = 2);

// Regions split by the state of the pair (i, j): labels lt0, between,
// gt1. Counted through the permutation x ideal route; counts may depend
// on the pair. Requires n >= 2, i < j.
Partition3 tree_poset_partition(int n, int i = 1, int j = 2);

// 0-rooted spanning trees on {0..n} split by the path relation: v1 on the
// v2-0 path / v2 on the v1-0 path / neither. Labels disj, on_v1, on_v2
// (with parts ordered disj first, matching the table convention).
Partition3 spanning_tree_partition(int n, int v1 = 1, int v2 = 2);

}  // namespace shidist
