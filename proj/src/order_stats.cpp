#include "shidist/order_stats.hpp"

#include <numeric>
#include <stdexcept>

namespace shidist {

bool majorizes(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("majorizes: length mismatch");
  if (!std::is_sorted(a.rbegin(), a.rend()) || !std::is_sorted(b.rbegin(), b.rend())) {
    throw std::invalid_argument("majorizes: inputs must be sorted descending");
  }
  if (std::accumulate(a.begin(), a.end(), 0LL) != std::accumulate(b.begin(), b.end(), 0LL)) {
    throw std::invalid_argument("majorizes: sums differ");
  }
  long long pa = 0, pb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa < pb) return false;
  }
  return true;
}

bool is_unimodal(const std::vector<long long>& s) {
  if (s.empty()) throw std::invalid_argument("is_unimodal: empty sequence");
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] <= s[i + 1]) ++i;
  while (i + 1 < s.size() && s[i] >= s[i + 1]) ++i;
  return i + 1 == s.size();
}

}  // namespace shidist
