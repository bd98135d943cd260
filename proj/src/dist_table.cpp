#include "shidist/dist_table.hpp"

#include <bit>
#include <stdexcept>

#include "shidist/inversion_poset.hpp"
#include "shidist/pairs.hpp"
#include "shidist/shi_enumerate.hpp"

namespace shidist {

const char* route_name(Route r) {
  return r == Route::Geometric ? "geometric" : "combinatorial";
}

long long DistTable::at(int k, int l) const {
  auto it = counts.find({k, l});
  return it == counts.end() ? 0 : it->second;
}

long long DistTable::total() const {
  long long t = 0;
  for (const auto& [kl, c] : counts) t += c;
  return t;
}

std::vector<long long> DistTable::row(int k) const {
  std::vector<long long> out(pair_count(n) - k + 1, 0);
  for (int l = 0; l <= pair_count(n) - k; ++l) out[l] = at(k, l);
  return out;
}

DistTable dist_table_from_regions(int n, const std::vector<Region>& regions) {
  DistTable t;
  t.n = n;
  for (const Region& r : regions) {
    const DistStats d = dist_stats(r);
    ++t.counts[{d.k, d.l}];
  }
  return t;
}

DistTable dist_table(int n, Route route) {
  if (n < 2) throw std::invalid_argument("dist_table: n must be >= 2");
  DistTable t;
  t.n = n;
  if (route == Route::Geometric) {
    return dist_table_from_regions(n, enumerate_regions_geometric(n));
  } else {
    if (n > 8) throw std::invalid_argument("dist_table: combinatorial route bound is n <= 8");
    for_each_permutation(n, [&](const Permutation& p) {
      const InversionPoset ip(p);
      const int invs = ip.size();
      const int k = pair_count(n) - invs;
      const std::vector<long long> by_size = ip.ideal_counts_by_size();
      for (int size = 0; size <= invs; ++size) {
        if (by_size[size] > 0) t.counts[{k, invs - size}] += by_size[size];
      }
    });
  }
  return t;
}

std::string dist_polynomial_string(const DistTable& t) {
  std::string out;
  const int top = pair_count(t.n);
  for (int degree = 0; degree <= top; ++degree) {
    for (int k = degree; k >= 0; --k) {
      const int l = degree - k;
      const long long c = t.at(k, l);
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      if (degree == 0) {
        out += std::to_string(c);
        continue;
      }
      if (c != 1) out += std::to_string(c);
      if (k > 0) {
        out += "q";
        if (k > 1) out += "^" + std::to_string(k);
      }
      if (l > 0) {
        out += "t";
        if (l > 1) out += "^" + std::to_string(l);
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace shidist
