#pragma once

#include <vector>

#include "shidist/inversion_poset.hpp"
#include "shidist/region.hpp"

namespace shidist {

// Ground-truth route: depth-first assignment over pairs in lexicographic
// order with incremental tightest-bound propagation; prefixes are pruned
// as soon as the partial difference-constraint system becomes infeasible.
// Practical bound n <= 6.
std::vector<Region> enumerate_regions_geometric(int n);

// Region of the pair (permutation, order ideal of its inversion poset):
// pairs i < j with i preceding j map to LT0; inverted pairs map to Between
// when the inversion lies in the ideal and to GT1 otherwise.
// Throws std::invalid_argument when the input set is not an order ideal.
Region region_from_perm_ideal(const InversionPoset& ip, IdealMask ideal);
Region region_from_perm_ideal(const Permutation& p, const std::vector<Inversion>& ideal);

// Production route: all permutations x all ideals of their inversion
// posets, mapped through region_from_perm_ideal. Yields each region of
// the arrangement exactly once. Practical bound n <= 8.
std::vector<Region> enumerate_regions_combinatorial(int n);

}  // namespace shidist
