#pragma once

#include <vector>

namespace shidist {

// Preference sequence over slots 0..n-1.
struct ParkingFunction {
  std::vector<int> prefs;

  int size() const { return static_cast<int>(prefs.size()); }
  bool operator==(const ParkingFunction&) const = default;
  auto operator<=>(const ParkingFunction&) const = default;
};

// True iff the weakly increasing rearrangement b of prefs satisfies
// b_i <= i-1 (1-based). Entries outside 0..n-1 make it false.
bool is_parking_function(const std::vector<int>& prefs);
bool is_parking_function(const ParkingFunction& pf);

// Visits all of PF_n in lexicographic order of the preference vector.
template <class F>
void for_each_parking_function(int n, F&& f) {
  std::vector<int> a(n, 0);
  while (true) {
    if (is_parking_function(a)) f(a);
    int i = n - 1;
    while (i >= 0 && a[i] == n - 1) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
}

}  // namespace shidist
