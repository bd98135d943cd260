#include "shidist/pak_stanley.hpp"

namespace shidist {

ParkingFunction pak_stanley_label(const Region& r) {
  ParkingFunction pf;
  pf.prefs.assign(r.n, 0);
  for (int i = 1; i <= r.n; ++i) {
    for (int j = i + 1; j <= r.n; ++j) {
      switch (r.state(i, j)) {
        case PairState::LT0: ++pf.prefs[i - 1]; break;
        case PairState::GT1: ++pf.prefs[j - 1]; break;
        case PairState::Between: break;
      }
    }
  }
  return pf;
}

}  // namespace shidist
