#include "shidist/trees.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace shidist {

namespace {

std::vector<std::vector<int>> adjacency(const RootedTree& t) {
  std::vector<std::vector<int>> adj(t.n + 1);
  for (int v = 1; v <= t.n; ++v) {
    adj[v].push_back(t.parent[v]);
    adj[t.parent[v]].push_back(v);
  }
  return adj;
}

// Orients an edge list toward root 0.
RootedTree orient(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  RootedTree t;
  t.n = n;
  t.parent.assign(n + 1, -1);
  std::vector<int> stack = {0};
  std::vector<bool> seen(n + 1, false);
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        t.parent[v] = u;
        stack.push_back(v);
      }
    }
  }
  for (int v = 0; v <= n; ++v) {
    if (!seen[v]) throw std::invalid_argument("orient: edge list is not a spanning tree");
  }
  return t;
}

}  // namespace

RootedTree prufer_decode(const PruferCode& code) {
  const int len = static_cast<int>(code.code.size());
  const int vertices = len + 2;  // {0..n} with n = len + 1
  const int n = vertices - 1;
  std::vector<int> degree(vertices, 1);
  for (int c : code.code) {
    if (c < 0 || c > n) throw std::invalid_argument("prufer_decode: entry out of range");
    ++degree[c];
  }
  std::vector<bool> removed(vertices, false);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int c : code.code) {
    int leaf = -1;
    for (int v = 0; v < vertices; ++v) {
      if (!removed[v] && degree[v] == 1) {
        leaf = v;
        break;
      }
    }
    edges.emplace_back(leaf, c);
    removed[leaf] = true;
    --degree[c];
  }
  int a = -1, b = -1;
  for (int v = 0; v < vertices; ++v) {
    if (!removed[v]) (a < 0 ? a : b) = v;
  }
  edges.emplace_back(a, b);
  return orient(n, edges);
}

PruferCode prufer_encode(const RootedTree& t) {
  const int vertices = t.n + 1;
  auto adj = adjacency(t);
  std::vector<int> degree(vertices);
  for (int v = 0; v < vertices; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<bool> removed(vertices, false);
  PruferCode out;
  for (int step = 0; step < vertices - 2; ++step) {
    int leaf = -1;
    for (int v = 0; v < vertices; ++v) {
      if (!removed[v] && degree[v] == 1) {
        leaf = v;
        break;
      }
    }
    int neighbor = -1;
    for (int u : adj[leaf]) {
      if (!removed[u]) {
        neighbor = u;
        break;
      }
    }
    out.code.push_back(neighbor);
    removed[leaf] = true;
    --degree[leaf];
    --degree[neighbor];
  }
  return out;
}

std::vector<int> path_to_root(const RootedTree& t, int v) {
  if (v < 1 || v > t.n) throw std::invalid_argument("path_to_root: vertex out of range");
  std::vector<int> path;
  for (int u = v; u != 0; u = t.parent[u]) path.push_back(u);
  path.push_back(0);
  return path;
}

int tree_inversion_count(const RootedTree& t) {
  int count = 0;
  for (int j = 1; j <= t.n; ++j) {
    for (int i = t.parent[j]; i != 0 && i != -1; i = t.parent[i]) {
      if (i > j) ++count;
    }
  }
  return count;
}

UnivariatePolynomial tree_inversion_enumerator(int vertex_count) {
  if (vertex_count < 2) {
    throw std::invalid_argument("tree_inversion_enumerator: need at least 2 vertices");
  }
  UnivariatePolynomial poly;
  for_each_rooted_tree(vertex_count - 1, [&](const RootedTree& t) {
    poly.add_term(tree_inversion_count(t), 1);
  });
  return poly;
}

namespace {

// AHU-style code of the edge-labeled tree rooted at `v`. Child blocks are
// ordered by incident edge label; labels within one node are distinct, so
// this is the lexicographically sorted block order.
void rooted_code(int v, int from, const std::vector<std::vector<int>>& adj,
                 const std::vector<std::vector<int>>& label, std::string& out) {
  out += '(';
  std::vector<std::pair<int, int>> children;  // (edge label, child)
  for (int c : adj[v]) {
    if (c != from) children.emplace_back(label[v][c], c);
  }
  std::sort(children.begin(), children.end());
  for (auto [lab, c] : children) {
    out += static_cast<char>('0' + lab);
    rooted_code(c, v, adj, label, out);
  }
  out += ')';
}

}  // namespace

long long edge_labeled_class_count(int n) {
  if (n < 1) throw std::invalid_argument("edge_labeled_class_count: n must be >= 1");
  if (n > 9) throw std::invalid_argument("edge_labeled_class_count: n > 9 unsupported");
  std::unordered_set<std::string> classes;
  std::vector<int> labels(n);
  for_each_rooted_tree(n, [&](const RootedTree& t) {
    auto adj = adjacency(t);
    std::vector<std::vector<int>> label(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    do {
      // Edge toward the parent of vertex v carries labels[v-1].
      for (int v = 1; v <= n; ++v) {
        label[v][t.parent[v]] = labels[v - 1];
        label[t.parent[v]][v] = labels[v - 1];
      }
      std::string best;
      for (int root = 0; root <= n; ++root) {
        std::string code;
        rooted_code(root, -1, adj, label, code);
        if (best.empty() || code < best) best = std::move(code);
      }
      classes.insert(std::move(best));
    } while (std::next_permutation(labels.begin(), labels.end()));
  });
  return static_cast<long long>(classes.size());
}

}  // namespace shidist
