#include "shidist/parking.hpp"

#include <algorithm>

namespace shidist {

bool is_parking_function(const std::vector<int>& prefs) {
  const int n = static_cast<int>(prefs.size());
  std::vector<int> sorted = prefs;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] < 0 || sorted[i] > i) return false;
  }
  return true;
}

bool is_parking_function(const ParkingFunction& pf) { return is_parking_function(pf.prefs); }

}  // namespace shidist
