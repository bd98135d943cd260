#pragma once

#include <vector>

namespace shidist {

// Dominance order on equal-sum sequences sorted descending: true iff
// every prefix sum of a is >= the corresponding prefix sum of b.
// Throws std::invalid_argument on unequal sums, lengths, or unsorted input.
bool majorizes(const std::vector<long long>& a, const std::vector<long long>& b);

// Nondecreasing up to some index, then nonincreasing.
bool is_unimodal(const std::vector<long long>& s);

}  // namespace shidist
