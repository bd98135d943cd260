#include "doctest.h"

#include <algorithm>
#include <set>

#include "shidist/parking.hpp"
#include "shidist/permutation.hpp"

using namespace shidist;

namespace {

// Independent oracle: simulate the one-way street. Car i drives to slot
// a_i and takes the next free slot; the sequence parks iff nobody runs
// off the end.
bool parks(const std::vector<int>& prefs) {
  const int n = static_cast<int>(prefs.size());
  std::vector<bool> taken(n, false);
  for (int a : prefs) {
    if (a < 0 || a >= n) return false;
    int slot = a;
    while (slot < n && taken[slot]) ++slot;
    if (slot == n) return false;
    taken[slot] = true;
  }
  return true;
}

}  // namespace

TEST_CASE("parking criterion on named examples") {
  CHECK(is_parking_function({1, 0, 1}));
  CHECK_FALSE(is_parking_function({0, 2, 2}));  // sorted (0,2,2): b_2 = 2 >= 2
  CHECK(is_parking_function({0}));
  CHECK_FALSE(is_parking_function({1}));
  CHECK_FALSE(is_parking_function({0, -1}));
  CHECK_FALSE(is_parking_function({0, 3, 0}));  // out of range
}

TEST_CASE("criterion agrees with the parking simulation") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> a(n, 0);
    long long members = 0;
    while (true) {
      CHECK(is_parking_function(a) == parks(a));
      if (parks(a)) ++members;
      int i = n - 1;
      while (i >= 0 && a[i] == n - 1) a[i--] = 0;
      if (i < 0) break;
      ++a[i];
    }
    CHECK(members == shi_region_count(n));
  }
}

TEST_CASE("enumeration yields PF_n exactly once") {
  std::set<std::vector<int>> seen;
  for_each_parking_function(3, [&](const std::vector<int>& a) {
    CHECK(seen.insert(a).second);
    CHECK(is_parking_function(a));
  });
  CHECK(seen.size() == 16);

  long long count1 = 0;
  std::vector<int> only;
  for_each_parking_function(1, [&](const std::vector<int>& a) {
    ++count1;
    only = a;
  });
  CHECK(count1 == 1);
  CHECK(only == std::vector<int>{0});

  long long count4 = 0, first_greater = 0;
  for_each_parking_function(4, [&](const std::vector<int>& a) {
    ++count4;
    if (a[0] > a[1]) ++first_greater;
  });
  CHECK(count4 == 125);
  CHECK(first_greater == 50);
}

TEST_CASE("any rearrangement of a parking function parks") {
  for (int n = 2; n <= 5; ++n) {
    for_each_parking_function(n, [&](const std::vector<int>& a) {
      std::vector<int> b = a;
      std::sort(b.begin(), b.end());
      do {
        CHECK(is_parking_function(b));
      } while (std::next_permutation(b.begin(), b.end()));
    });
  }
}
