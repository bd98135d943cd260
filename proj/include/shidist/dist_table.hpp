#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shidist/region.hpp"

namespace shidist {

enum class Route { Geometric, Combinatorial };

const char* route_name(Route r);

// The matrix Dist_n(k, l): number of regions separated from the base
// region by k hyperplanes x_i - x_j = 0 and l hyperplanes x_i - x_j = 1.
struct DistTable {
  int n = 0;
  std::map<std::pair<int, int>, long long> counts;  // zero entries omitted

  long long at(int k, int l) const;
  long long total() const;
  // Counts for fixed k over l = 0..C(n,2)-k, zeros included.
  std::vector<long long> row(int k) const;

  bool operator==(const DistTable&) const = default;
};

// Geometric route tallies the oracle enumeration (n <= 6); combinatorial
// route sums ideal-size counts of inversion posets over all permutations
// (n <= 8), with k non-inversions and l = |inversions| - |ideal|.
DistTable dist_table(int n, Route route);

// Tally of an already-materialized region list (e.g. from a cache).
DistTable dist_table_from_regions(int n, const std::vector<Region>& regions);

// D(q,t) = sum over regions of q^k t^l, terms in graded order (total
// degree ascending, then q-exponent descending).
std::string dist_polynomial_string(const DistTable& t);

}  // namespace shidist
