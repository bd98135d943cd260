#pragma once

#include <cstdint>
#include <vector>

#include "shidist/permutation.hpp"

namespace shidist {

// An inversion of a permutation: the larger value `hi` sits left of the
// smaller value `lo`. Positions are 1-based.
struct Inversion {
  int hi = 0, lo = 0;      // values, hi > lo
  int left = 0, right = 0; // positions, left < right, p[left] = hi

  // Positional containment: this inversion lies weakly inside `outer`.
  bool nested_in(const Inversion& outer) const {
    return outer.left <= left && right <= outer.right;
  }

  bool operator==(const Inversion&) const = default;
  auto operator<=>(const Inversion&) const = default;
};

// All inversions of p, in lexicographic position order.
std::vector<Inversion> inversions(const Permutation& p);
int non_inversion_count(const Permutation& p);

std::string to_string(const Inversion& inv);

// Order ideals are bitmasks over the poset's element indices.
using IdealMask = std::uint32_t;

// The inversions of a permutation ordered by positional containment:
// g <= h iff the position interval of g nests inside that of h.
// Elements are stored in a linear extension (span ascending), so ideal
// enumeration can decide membership left to right.
class InversionPoset {
 public:
  explicit InversionPoset(const Permutation& p);

  int size() const { return static_cast<int>(elems_.size()); }
  const Permutation& permutation() const { return perm_; }
  const std::vector<Inversion>& elements() const { return elems_; }

  bool leq(int a, int b) const {
    return a == b || elems_[a].nested_in(elems_[b]);
  }
  // Elements strictly below e.
  IdealMask down_mask(int e) const { return down_[e]; }

  bool is_ideal(IdealMask m) const;

  // Index of the inversion with value pair (hi, lo), or -1 if the
  // permutation does not invert that pair.
  int inversion_index(int hi, int lo) const;

  template <class F>
  void for_each_ideal(F&& f) const {
    ideal_rec(0, IdealMask{0}, f);
  }

  std::vector<IdealMask> ideals() const;
  long long ideal_count() const;
  // Entry m = number of order ideals of cardinality m.
  std::vector<long long> ideal_counts_by_size() const;

 private:
  template <class F>
  void ideal_rec(int idx, IdealMask m, F&& f) const {
    if (idx == size()) {
      f(m);
      return;
    }
    ideal_rec(idx + 1, m, f);  // element idx stays out
    if ((down_[idx] & ~m) == 0) {
      ideal_rec(idx + 1, m | (IdealMask{1} << idx), f);
    }
  }

  Permutation perm_;
  std::vector<Inversion> elems_;
  std::vector<IdealMask> down_;
  std::vector<int> index_by_pair_;  // pair_index(n, lo, hi) -> element or -1
};

}  // namespace shidist
