#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace shidist {

// A permutation of [n] = {1..n} in one-line notation.
struct Permutation {
  std::vector<int> entries;

  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  int size() const { return static_cast<int>(entries.size()); }

  // 1-based accessors.
  int value_at(int pos) const { return entries[pos - 1]; }
  int position_of(int value) const;

  // True iff `value` appears at a smaller position than `other`.
  bool precedes(int value, int other) const {
    return position_of(value) < position_of(other);
  }

  static Permutation identity(int n);
  Permutation reversed() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

std::string to_string(const Permutation& p);

// Visits all n! permutations of [n] in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f) {
  Permutation p = Permutation::identity(n);
  do {
    f(p);
  } while (std::next_permutation(p.entries.begin(), p.entries.end()));
}

long long factorial(int n);
long long ipow(long long base, int exp);

// (n+1)^(n-1): regions of the Shi arrangement, parking functions,
// labeled trees on n+1 vertices.
long long shi_region_count(int n);

}  // namespace shidist
