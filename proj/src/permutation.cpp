#include "shidist/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace shidist {

Permutation::Permutation(std::vector<int> one_line) : entries(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : entries) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("Permutation: entries must be a bijection on 1..n");
    }
    seen[v] = true;
  }
}

int Permutation::position_of(int value) const {
  for (int pos = 1; pos <= size(); ++pos) {
    if (entries[pos - 1] == value) return pos;
  }
  throw std::invalid_argument("Permutation::position_of: value out of range");
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.entries.resize(n);
  std::iota(p.entries.begin(), p.entries.end(), 1);
  return p;
}

Permutation Permutation::reversed() const {
  Permutation p = *this;
  std::reverse(p.entries.begin(), p.entries.end());
  return p;
}

std::string to_string(const Permutation& p) {
  std::string s;
  for (int i = 0; i < p.size(); ++i) {
    if (p.size() > 9 && i > 0) s += ',';
    s += std::to_string(p.entries[i]);
  }
  return s;
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

long long shi_region_count(int n) { return ipow(n + 1, n - 1); }

}  // namespace shidist
