#pragma once

#include <string>
#include <vector>

#include "shidist/pairs.hpp"

namespace shidist {

// Side of a region relative to the pair of hyperplanes x_i - x_j = 0, 1
// for a pair i < j.
enum class PairState : unsigned char {
  LT0 = 0,      // x_i - x_j < 0
  Between = 1,  // 0 < x_i - x_j < 1
  GT1 = 2,      // x_i - x_j > 1
};

char pair_state_char(PairState s);            // '<', 'b', '>'
PairState pair_state_from_char(char c);       // throws std::invalid_argument

// A region of the Shi arrangement, encoded by one PairState per pair
// (i, j), i < j, in lexicographic pair order.
struct Region {
  int n = 0;
  std::vector<PairState> states;

  PairState state(int i, int j) const { return states[pair_index(n, i, j)]; }

  bool operator==(const Region&) const = default;
  auto operator<=>(const Region&) const = default;
};

// Separating-hyperplane counts relative to the base region:
// k = pairs with x_i - x_j = 0 separating (state LT0),
// l = pairs with x_i - x_j = 1 separating (state GT1).
struct DistStats {
  int k = 0;
  int l = 0;
};

DistStats dist_stats(const Region& r);

// The all-Between region x_1 > x_2 > ... > x_n > x_1 - 1.
Region base_region(int n);

// One region per line, pair_count(n) characters over {<, b, >}.
std::string region_line(const Region& r);
Region region_from_line(int n, const std::string& line);  // throws std::invalid_argument

}  // namespace shidist
