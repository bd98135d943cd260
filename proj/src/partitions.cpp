#include "shidist/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "shidist/inversion_poset.hpp"
#include "shidist/parking.hpp"
#include "shidist/trees.hpp"

namespace shidist {

std::array<long long, 3> Partition3::sorted_desc() const {
  std::array<long long, 3> s = parts;
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

std::vector<long long> Partition3::sorted_desc_vec() const {
  const auto s = sorted_desc();
  return {s[0], s[1], s[2]};
}

long long Partition3::largest() const { return sorted_desc()[0]; }
long long Partition3::smallest() const { return sorted_desc()[2]; }

std::string Partition3::str() const {
  std::string out;
  for (int t = 0; t < 3; ++t) {
    if (t) out += ' ';
    out += labels[t] + "=" + std::to_string(parts[t]);
  }
  return out;
}

Partition3 parking_partition(int n, int i, int j) {
  if (n < 2) throw std::invalid_argument("parking_partition: n must be >= 2");
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw std::invalid_argument("parking_partition: need distinct indices in 1..n");
  }
  Partition3 p{n, {"gt", "eq", "lt"}, {0, 0, 0}};
  for_each_parking_function(n, [&](const std::vector<int>& a) {
    const int ai = a[i - 1], aj = a[j - 1];
    ++p.parts[ai > aj ? 0 : (ai == aj ? 1 : 2)];
  });
  return p;
}

Partition3 tree_poset_partition(int n, int i, int j) {
  if (n < 2) throw std::invalid_argument("tree_poset_partition: n must be >= 2");
  if (!(1 <= i && i < j && j <= n)) {
    throw std::invalid_argument("tree_poset_partition: need 1 <= i < j <= n");
  }
  Partition3 p{n, {"lt0", "between", "gt1"}, {0, 0, 0}};
  for_each_permutation(n, [&](const Permutation& perm) {
    const InversionPoset ip(perm);
    if (perm.precedes(i, j)) {
      p.parts[0] += ip.ideal_count();
      return;
    }
    const int e = ip.inversion_index(j, i);
    ip.for_each_ideal([&](IdealMask m) { ++p.parts[((m >> e) & 1) ? 1 : 2]; });
  });
  return p;
}

Partition3 spanning_tree_partition(int n, int v1, int v2) {
  if (n < 2) throw std::invalid_argument("spanning_tree_partition: n must be >= 2");
  if (v1 == v2 || v1 < 1 || v2 < 1 || v1 > n || v2 > n) {
    throw std::invalid_argument("spanning_tree_partition: need distinct vertices in 1..n");
  }
  Partition3 p{n, {"disj", "on_v1", "on_v2"}, {0, 0, 0}};
  for_each_rooted_tree(n, [&](const RootedTree& t) {
    bool v1_on = false;
    for (int u = t.parent[v2]; u != -1 && u != 0; u = t.parent[u]) {
      if (u == v1) {
        v1_on = true;
        break;
      }
    }
    if (v1_on) {
      ++p.parts[1];
      return;
    }
    for (int u = t.parent[v1]; u != -1 && u != 0; u = t.parent[u]) {
      if (u == v2) {
        ++p.parts[2];
        return;
      }
    }
    ++p.parts[0];
  });
  return p;
}

}  // namespace shidist
