#include "doctest.h"

#include <set>

#include "shidist/feasibility.hpp"
#include "shidist/forbidden.hpp"
#include "shidist/shi_enumerate.hpp"
#include "shidist/tree_poset.hpp"

using namespace shidist;

TEST_CASE("posets of the base region and of chamber regions") {
  const TreePoset antichain = region_to_tree_poset(base_region(4));
  for (int u = 1; u <= 4; ++u) {
    for (int v = 1; v <= 4; ++v) {
      if (u != v) CHECK(antichain.incomparable(u, v));
    }
  }
  CHECK(antichain.forward_arc_count() == 0);
  CHECK(antichain.backward_arc_count() == 0);

  const TreePoset chain = region_to_tree_poset(region_from_line(3, "<<<"));
  CHECK(chain.less(1, 2));
  CHECK(chain.less(2, 3));
  CHECK(chain.less(1, 3));
  CHECK(chain.forward_arc_count() == 3);
}

TEST_CASE("arc relation is transitive on every feasible region") {
  for (int n = 2; n <= 5; ++n) {
    for (const Region& r : enumerate_regions_geometric(n)) {
      const TreePoset tp = region_to_tree_poset(r);  // would throw otherwise
      const DistStats d = dist_stats(r);
      CHECK(tp.forward_arc_count() == d.k);
      CHECK(tp.backward_arc_count() == d.l);
    }
  }
}

TEST_CASE("canonical linear extension picks the largest minimal vertex") {
  CHECK(canonical_linear_extension(region_to_tree_poset(base_region(3))) ==
        Permutation({3, 2, 1}));
  CHECK(canonical_linear_extension(region_to_tree_poset(region_from_line(3, "<<<"))) ==
        Permutation({1, 2, 3}));
}

TEST_CASE("linear extension recovers the source permutation of every ideal") {
  for (int n = 2; n <= 5; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      const InversionPoset ip(p);
      ip.for_each_ideal([&](IdealMask m) {
        const Region r = region_from_perm_ideal(ip, m);
        const TreePoset tp = region_to_tree_poset(r);
        const Permutation back = canonical_linear_extension(tp);
        CHECK(back == p);
        // And always a linear extension: arcs point forward.
        for (int a = 1; a <= n; ++a) {
          for (int b = 1; b <= n; ++b) {
            if (tp.less(a, b)) CHECK(back.precedes(a, b));
          }
        }
      });
    });
  }
}

TEST_CASE("feasible equals transitive and forbidden-free") {
  // The Athanasiadis-style characterization, replayed against the oracle:
  // an assignment is a region iff its relation is transitive and no
  // triple induces a mined forbidden configuration.
  const auto forbidden = mine_forbidden_triples(4);
  REQUIRE(forbidden.size() == 3);
  const std::set<TripleConfig> bad(forbidden.begin(), forbidden.end());
  for (int n = 3; n <= 5; ++n) {
    const int pairs = pair_count(n);
    std::vector<PairState> states(pairs);
    long long assignments = 1;
    for (int t = 0; t < pairs; ++t) assignments *= 3;
    for (long long code = 0; code < assignments; ++code) {
      long long c = code;
      for (int t = 0; t < pairs; ++t, c /= 3) states[t] = static_cast<PairState>(c % 3);
      const TreePoset tp = tree_poset_from_states(n, states);
      bool clean = tp.is_transitive();
      for (int i = 1; i <= n && clean; ++i) {
        for (int j = i + 1; j <= n && clean; ++j) {
          for (int k = j + 1; k <= n && clean; ++k) {
            const TripleConfig cfg{{states[pair_index(n, i, j)], states[pair_index(n, j, k)],
                                    states[pair_index(n, i, k)]}};
            if (bad.contains(cfg)) clean = false;
          }
        }
      }
      CHECK(clean == is_feasible(n, states));
    }
  }
}
