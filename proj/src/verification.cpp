#include "shidist/verification.hpp"

#include <sstream>
#include <stdexcept>

#include "shidist/dist_table.hpp"
#include "shidist/order_stats.hpp"
#include "shidist/pairs.hpp"
#include "shidist/partitions.hpp"
#include "shidist/permutation.hpp"
#include "shidist/trees.hpp"

namespace shidist {

bool VerificationReport::all_pass() const {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

std::string join3(const std::array<long long, 3>& a) {
  return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
}

DistTable geometric_table(int n, const std::vector<Region>* regions) {
  if (regions == nullptr) return dist_table(n, Route::Geometric);
  return dist_table_from_regions(n, *regions);
}

}  // namespace

VerificationReport theorem_suite(int n, const std::vector<Region>* geometric_regions) {
  if (n < 2 || n > 7) throw std::invalid_argument("theorem_suite: n must be in 2..7");
  VerificationReport rep;
  rep.n = n;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    rep.checks.push_back({name, pass, detail});
  };

  const Partition3 parking = parking_partition(n);
  const Partition3 poset = tree_poset_partition(n);
  const Partition3 spanning = spanning_tree_partition(n);
  const long long regions = shi_region_count(n);

  add("partition_sums", parking.sum() == regions && poset.sum() == regions && spanning.sum() == regions,
      "sums " + std::to_string(parking.sum()) + "," + std::to_string(poset.sum()) + "," +
          std::to_string(spanning.sum()) + " vs (n+1)^(n-1)=" + std::to_string(regions));

  const long long cayley = ipow(n + 1, n - 2);
  add("eq_equals_cayley_power", parking.parts[1] == cayley,
      "eq_" + std::to_string(n) + "=" + std::to_string(parking.parts[1]) +
          " (n+1)^(n-2)=" + std::to_string(cayley));

  if (n <= 5) {
    const long long ut = edge_labeled_class_count(n);
    add("eq_equals_edge_labeled_classes", parking.parts[1] == ut,
        "eq_" + std::to_string(n) + "=" + std::to_string(parking.parts[1]) +
            " UT_" + std::to_string(n) + "=" + std::to_string(ut));
  }

  add("gt_equals_tree_poset_lt0", parking.parts[0] == poset.parts[0],
      "gt=" + std::to_string(parking.parts[0]) + " lt0=" + std::to_string(poset.parts[0]));

  add("parking_majorizes_tree_poset", majorizes(parking.sorted_desc_vec(), poset.sorted_desc_vec()),
      join3(parking.sorted_desc()) + " vs " + join3(poset.sorted_desc()));

  add("parking_order", parking.parts[0] == parking.parts[2] && parking.parts[2] >= parking.parts[1],
      parking.str());

  add("tree_poset_order", poset.parts[0] >= poset.parts[1] && poset.parts[0] >= poset.parts[2],
      poset.str());

  add("spanning_order", spanning.parts[0] >= spanning.parts[1] && spanning.parts[1] == spanning.parts[2],
      spanning.str());

  if (n <= 5) {
    const DistTable geo = geometric_table(n, geometric_regions);
    const DistTable comb = dist_table(n, Route::Combinatorial);
    add("dist_routes_agree", geo == comb,
        "geometric total=" + std::to_string(geo.total()) +
            " combinatorial total=" + std::to_string(comb.total()));
  }

  return rep;
}

VerificationReport conjecture_suite(int n_max) {
  if (n_max < 2 || n_max > 7) throw std::invalid_argument("conjecture_suite: n_max must be in 2..7");
  VerificationReport rep;
  rep.n = n_max;
  for (int n = 2; n <= n_max; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ":";
    const Partition3 poset = tree_poset_partition(n);
    const Partition3 spanning = spanning_tree_partition(n);

    rep.checks.push_back({tag + "smallest_parts_equal", spanning.smallest() == poset.smallest(),
                          "spanning " + spanning.str() + " | tree-poset " + poset.str()});

    rep.checks.push_back(
        {tag + "spanning_majorizes_tree_poset",
         majorizes(spanning.sorted_desc_vec(), poset.sorted_desc_vec()),
         join3(spanning.sorted_desc()) + " vs " + join3(poset.sorted_desc())});

    const DistTable t = dist_table(n, Route::Combinatorial);
    bool unimodal = true;
    std::string detail = "all rows unimodal";
    for (int k = 0; k <= pair_count(n) && unimodal; ++k) {
      std::vector<long long> row = t.row(k);
      while (!row.empty() && row.back() == 0) row.pop_back();
      if (row.empty()) continue;
      if (!is_unimodal(row)) {
        unimodal = false;
        std::ostringstream os;
        os << "counterexample k=" << k << " row=";
        for (long long v : row) os << v << ' ';
        detail = os.str();
      }
    }
    rep.checks.push_back({tag + "dist_rows_unimodal", unimodal, detail});
  }
  return rep;
}

}  // namespace shidist
