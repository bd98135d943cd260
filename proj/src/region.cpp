#include "shidist/region.hpp"

#include <stdexcept>

namespace shidist {

char pair_state_char(PairState s) {
  switch (s) {
    case PairState::LT0: return '<';
    case PairState::Between: return 'b';
    case PairState::GT1: return '>';
  }
  throw std::invalid_argument("pair_state_char: bad state");
}

PairState pair_state_from_char(char c) {
  switch (c) {
    case '<': return PairState::LT0;
    case 'b': return PairState::Between;
    case '>': return PairState::GT1;
  }
  throw std::invalid_argument(std::string("pair_state_from_char: bad character '") + c + "'");
}

DistStats dist_stats(const Region& r) {
  DistStats d;
  for (PairState s : r.states) {
    if (s == PairState::LT0) ++d.k;
    if (s == PairState::GT1) ++d.l;
  }
  return d;
}

Region base_region(int n) {
  return Region{n, std::vector<PairState>(pair_count(n), PairState::Between)};
}

std::string region_line(const Region& r) {
  std::string line;
  line.reserve(r.states.size());
  for (PairState s : r.states) line += pair_state_char(s);
  return line;
}

Region region_from_line(int n, const std::string& line) {
  if (static_cast<int>(line.size()) != pair_count(n)) {
    throw std::invalid_argument("region_from_line: wrong length for n=" + std::to_string(n));
  }
  Region r;
  r.n = n;
  r.states.reserve(line.size());
  for (char c : line) r.states.push_back(pair_state_from_char(c));
  return r;
}

}  // namespace shidist
