#include "shidist/structure_checks.hpp"

#include <set>
#include <stdexcept>

#include "shidist/shi_enumerate.hpp"
#include "shidist/tree_poset.hpp"

namespace shidist {

bool verify_reverse_propagation(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("verify_reverse_propagation: n must be in 2..5");
  const std::vector<Region> regions = enumerate_regions_geometric(n);
  std::set<Region> all(regions.begin(), regions.end());
  for (const Region& r : regions) {
    bool has_between = false, has_parent = false;
    for (std::size_t pr = 0; pr < r.states.size(); ++pr) {
      if (r.states[pr] != PairState::Between) continue;
      has_between = true;
      Region parent = r;
      parent.states[pr] = PairState::GT1;
      if (all.contains(parent)) {
        has_parent = true;
        break;
      }
    }
    if (has_between && !has_parent) return false;
  }
  return true;
}

bool verify_inner_inversion_order(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("verify_inner_inversion_order: n must be in 2..5");
  for (const Region& r : enumerate_regions_geometric(n)) {
    const Permutation p = canonical_linear_extension(region_to_tree_poset(r));
    const InversionPoset ip(p);
    IdealMask between = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const PairState s = r.state(i, j);
        const int e = ip.inversion_index(j, i);
        if (e < 0) {
          // Non-inverted pair: the region must sit on the LT0 side.
          if (s != PairState::LT0) return false;
        } else {
          if (s == PairState::LT0) return false;
          if (s == PairState::Between) between |= IdealMask{1} << e;
        }
      }
    }
    if (!ip.is_ideal(between)) return false;
  }
  return true;
}

}  // namespace shidist
