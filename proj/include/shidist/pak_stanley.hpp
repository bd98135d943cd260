#pragma once

#include "shidist/parking.hpp"
#include "shidist/region.hpp"

namespace shidist {

// Pak-Stanley label of a region: every LT0 pair (i, j) contributes 1 to
// a_i, every GT1 pair (i, j) contributes 1 to a_j. The coordinate sum
// equals the distance k + l to the base region, and over all regions the
// labels are exactly PF_n.
ParkingFunction pak_stanley_label(const Region& r);

}  // namespace shidist
