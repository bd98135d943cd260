#pragma once

namespace shidist {

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Lexicographic rank of the pair (i, j), 1 <= i < j <= n:
// (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).
constexpr int pair_index(int n, int i, int j) {
  return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}

}  // namespace shidist
