#pragma once

namespace shidist {

// Every region with at least one incomparable pair has a parent region at
// distance one more that differs only by one pair Between -> GT1 (the
// reverse of converting a backward arc into an incomparability).
// Exhaustive over the geometric oracle; requires 2 <= n <= 5.
bool verify_reverse_propagation(int n);

// For every feasible region, the set of inversions of its canonical
// linear extension that sit in state Between is an order ideal of the
// inversion poset: an outer inversion can only be converted after every
// inversion nested strictly inside it. Requires 2 <= n <= 5.
bool verify_inner_inversion_order(int n);

}  // namespace shidist
