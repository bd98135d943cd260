#include "shidist/shi_enumerate.hpp"

#include <limits>
#include <stdexcept>

namespace shidist {

namespace {

// Incremental closure of the scaled difference constraints. bound_ holds
// the tightest scaled upper bound on x_t - x_s over the edges inserted so
// far; inserting an edge is an O(n^2) min-plus update. The scale is fixed
// at 2 * pair_count(n) + 1, an upper bound on E + 1 for any assignment,
// which preserves the sign separation between cycles with bound sum <= 0
// and >= 1.
class RegionSearch {
 public:
  explicit RegionSearch(int n)
      : n_(n),
        scale_(2 * pair_count(n) + 1),
        bound_((n + 1) * (n + 1), kInf),
        states_(pair_count(n), PairState::LT0) {
    for (int v = 1; v <= n_; ++v) at(v, v) = 0;
    pairs_.reserve(pair_count(n));
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) pairs_.emplace_back(i, j);
    }
  }

  std::vector<Region> run() {
    out_.clear();
    descend(0);
    return std::move(out_);
  }

 private:
  static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

  long long& at(int s, int t) { return bound_[s * (n_ + 1) + t]; }

  // x_to - x_from < c, scaled. Returns false when the edge closes a cycle
  // with nonpositive bound sum; otherwise folds it into the closure.
  bool insert(int from, int to, int c) {
    const long long w = static_cast<long long>(c) * scale_ - 1;
    if (at(to, from) != kInf && at(to, from) + w < 0) return false;
    for (int s = 1; s <= n_; ++s) {
      const long long head = at(s, from);
      if (head == kInf) continue;
      for (int t = 1; t <= n_; ++t) {
        const long long tail = at(to, t);
        if (tail == kInf) continue;
        const long long cand = head + w + tail;
        if (cand < at(s, t)) at(s, t) = cand;
      }
    }
    return true;
  }

  bool apply(int pair, PairState s) {
    const auto [i, j] = pairs_[pair];
    switch (s) {
      case PairState::LT0:
        return insert(j, i, 0);
      case PairState::Between:
        return insert(i, j, 0) && insert(j, i, 1);
      case PairState::GT1:
        return insert(i, j, -1);
    }
    return false;
  }

  void descend(int pair) {
    if (pair == static_cast<int>(pairs_.size())) {
      out_.push_back(Region{n_, states_});
      return;
    }
    const std::vector<long long> snapshot = bound_;
    for (PairState s : {PairState::LT0, PairState::Between, PairState::GT1}) {
      if (apply(pair, s)) {
        states_[pair] = s;
        descend(pair + 1);
      }
      bound_ = snapshot;
    }
  }

  int n_;
  long long scale_;
  std::vector<long long> bound_;
  std::vector<PairState> states_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Region> out_;
};

}  // namespace

std::vector<Region> enumerate_regions_geometric(int n) {
  if (n < 2 || n > 6) {
    throw std::invalid_argument("enumerate_regions_geometric: n must be in 2..6");
  }
  return RegionSearch(n).run();
}

Region region_from_perm_ideal(const InversionPoset& ip, IdealMask ideal) {
  if (!ip.is_ideal(ideal)) {
    throw std::invalid_argument("region_from_perm_ideal: set is not an order ideal");
  }
  const Permutation& p = ip.permutation();
  const int n = p.size();
  Region r;
  r.n = n;
  r.states.resize(pair_count(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      PairState s;
      if (p.precedes(i, j)) {
        s = PairState::LT0;
      } else {
        const int e = ip.inversion_index(j, i);
        s = ((ideal >> e) & 1) ? PairState::Between : PairState::GT1;
      }
      r.states[pair_index(n, i, j)] = s;
    }
  }
  return r;
}

Region region_from_perm_ideal(const Permutation& p, const std::vector<Inversion>& ideal) {
  InversionPoset ip(p);
  IdealMask mask = 0;
  for (const Inversion& inv : ideal) {
    const int e = ip.inversion_index(inv.hi, inv.lo);
    if (e < 0 || ip.elements()[e] != inv) {
      throw std::invalid_argument("region_from_perm_ideal: not an inversion of the permutation");
    }
    mask |= IdealMask{1} << e;
  }
  return region_from_perm_ideal(ip, mask);
}

std::vector<Region> enumerate_regions_combinatorial(int n) {
  if (n < 2 || n > 8) {
    throw std::invalid_argument("enumerate_regions_combinatorial: n must be in 2..8");
  }
  std::vector<Region> out;
  out.reserve(shi_region_count(n));
  for_each_permutation(n, [&](const Permutation& p) {
    InversionPoset ip(p);
    ip.for_each_ideal([&](IdealMask m) { out.push_back(region_from_perm_ideal(ip, m)); });
  });
  return out;
}

}  // namespace shidist
