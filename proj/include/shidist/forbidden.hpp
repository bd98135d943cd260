#pragma once

#include <array>
#include <string>
#include <vector>

#include "shidist/region.hpp"

namespace shidist {

// Pair states of an ordered triple i < j < k: the states of (i,j), (j,k)
// and (i,k), in that order. 27 configurations exist.
struct TripleConfig {
  std::array<PairState, 3> states{};  // s_ij, s_jk, s_ik

  int rank() const {
    return static_cast<int>(states[0]) * 9 + static_cast<int>(states[1]) * 3 +
           static_cast<int>(states[2]);
  }
  static TripleConfig from_rank(int r);

  bool operator==(const TripleConfig&) const = default;
  auto operator<=>(const TripleConfig&) const = default;
};

// True iff the three-vertex arc relation induced by the states is
// transitive (i.e. a poset).
bool triple_is_transitive(const TripleConfig& c);

// "(i,j)=b (j,k)=b (i,k)=<  [i<k, j incomparable to i and k]"
std::string to_string(const TripleConfig& c);

// Configurations induced on some triple of a feasible region of S_n,
// after order-isomorphic relabeling onto i < j < k. Requires 3 <= n <= 5.
std::vector<TripleConfig> occurring_triples(int n);

// The forbidden subposets: configurations that never occur yet are honest
// posets (transitivity violations are excluded). Sorted by rank(); the
// result is the same for n = 3, 4, 5.
std::vector<TripleConfig> mine_forbidden_triples(int n);

}  // namespace shidist
