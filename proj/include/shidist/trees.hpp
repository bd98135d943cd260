#pragma once

#include <vector>

#include "shidist/permutation.hpp"
#include "shidist/polynomial.hpp"

namespace shidist {

// A labeled tree on {0..n} oriented toward the root 0.
struct RootedTree {
  int n = 0;
  std::vector<int> parent;  // parent[v] for v = 1..n; parent[0] = -1

  bool operator==(const RootedTree&) const = default;
};

// Length n-1 sequence over {0..n}; bijective with labeled trees on {0..n}.
struct PruferCode {
  std::vector<int> code;

  bool operator==(const PruferCode&) const = default;
};

// Standard Prüfer bijection (smallest leaf removed first). The vertex
// count is code.size() + 2; throws on out-of-range entries.
RootedTree prufer_decode(const PruferCode& code);
PruferCode prufer_encode(const RootedTree& t);

// v, parent(v), ..., 0.
std::vector<int> path_to_root(const RootedTree& t, int v);

// Visits all (n+1)^(n-1) labeled trees on {0..n} in Prüfer-code order.
template <class F>
void for_each_rooted_tree(int n, F&& f) {
  std::vector<int> code(n - 1 > 0 ? n - 1 : 0, 0);
  while (true) {
    f(prufer_decode(PruferCode{code}));
    int i = static_cast<int>(code.size()) - 1;
    while (i >= 0 && code[i] == n) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
}

// Tree inversions: pairs i > j >= 1 with i a proper ancestor of j.
int tree_inversion_count(const RootedTree& t);

// Coefficient of q^t = number of labeled trees on {0..vertex_count-1}
// with exactly t inversions. Evaluates to vertex_count^(vertex_count-2)
// at q = 1.
UnivariatePolynomial tree_inversion_enumerator(int vertex_count);

// Number of isomorphism classes of trees on n+1 unlabeled vertices whose
// n edges carry distinct labels 1..n. Canonical form: rooted AHU code
// with the incident edge label prepended to each child block, minimized
// over all root choices.
long long edge_labeled_class_count(int n);

}  // namespace shidist
