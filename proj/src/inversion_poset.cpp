#include "shidist/inversion_poset.hpp"

#include <bit>
#include <stdexcept>

#include "shidist/pairs.hpp"

namespace shidist {

std::vector<Inversion> inversions(const Permutation& p) {
  std::vector<Inversion> out;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p.value_at(i) > p.value_at(j)) {
        out.push_back(Inversion{p.value_at(i), p.value_at(j), i, j});
      }
    }
  }
  return out;
}

int non_inversion_count(const Permutation& p) {
  const int n = p.size();
  return pair_count(n) - static_cast<int>(inversions(p).size());
}

std::string to_string(const Inversion& inv) {
  return "(" + std::to_string(inv.hi) + "," + std::to_string(inv.lo) + ")";
}

InversionPoset::InversionPoset(const Permutation& p) : perm_(p) {
  elems_ = inversions(p);
  if (elems_.size() > 31) {
    throw std::invalid_argument("InversionPoset: more than 31 inversions unsupported");
  }
  // Span-ascending order is a linear extension: strict nesting strictly
  // shrinks the position interval.
  std::stable_sort(elems_.begin(), elems_.end(), [](const Inversion& a, const Inversion& b) {
    const int sa = a.right - a.left, sb = b.right - b.left;
    return sa != sb ? sa < sb : a.left < b.left;
  });

  const int m = size();
  down_.assign(m, 0);
  for (int e = 0; e < m; ++e) {
    for (int d = 0; d < m; ++d) {
      if (d != e && elems_[d].nested_in(elems_[e])) down_[e] |= IdealMask{1} << d;
    }
  }

  index_by_pair_.assign(pair_count(p.size()), -1);
  for (int e = 0; e < m; ++e) {
    index_by_pair_[pair_index(p.size(), elems_[e].lo, elems_[e].hi)] = e;
  }
}

bool InversionPoset::is_ideal(IdealMask m) const {
  for (int e = 0; e < size(); ++e) {
    if ((m >> e) & 1) {
      if ((down_[e] & ~m) != 0) return false;
    }
  }
  return true;
}

int InversionPoset::inversion_index(int hi, int lo) const {
  if (lo > hi) return -1;
  return index_by_pair_[pair_index(perm_.size(), lo, hi)];
}

std::vector<IdealMask> InversionPoset::ideals() const {
  std::vector<IdealMask> out;
  for_each_ideal([&](IdealMask m) { out.push_back(m); });
  return out;
}

long long InversionPoset::ideal_count() const {
  long long c = 0;
  for_each_ideal([&](IdealMask) { ++c; });
  return c;
}

std::vector<long long> InversionPoset::ideal_counts_by_size() const {
  std::vector<long long> counts(size() + 1, 0);
  for_each_ideal([&](IdealMask m) { ++counts[std::popcount(m)]; });
  return counts;
}

}  // namespace shidist
