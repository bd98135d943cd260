#include "shidist/forbidden.hpp"

#include <stdexcept>

#include "shidist/shi_enumerate.hpp"
#include "shidist/tree_poset.hpp"

namespace shidist {

TripleConfig TripleConfig::from_rank(int r) {
  TripleConfig c;
  c.states = {static_cast<PairState>(r / 9), static_cast<PairState>((r / 3) % 3),
              static_cast<PairState>(r % 3)};
  return c;
}

namespace {

// Relation on the model triple {1, 2, 3} standing for i < j < k.
TreePoset triple_poset(const TripleConfig& c) {
  TreePoset tp(3);
  const std::array<std::pair<int, int>, 3> pairs = {{{1, 2}, {2, 3}, {1, 3}}};
  for (int t = 0; t < 3; ++t) {
    const auto [a, b] = pairs[t];
    if (c.states[t] == PairState::LT0) tp.set_less(a, b);
    if (c.states[t] == PairState::GT1) tp.set_less(b, a);
  }
  return tp;
}

}  // namespace

bool triple_is_transitive(const TripleConfig& c) { return triple_poset(c).is_transitive(); }

std::string to_string(const TripleConfig& c) {
  const char* names[3] = {"(i,j)", "(j,k)", "(i,k)"};
  const char* sym[3] = {"i", "j", "k"};
  std::string out;
  for (int t = 0; t < 3; ++t) {
    if (t) out += ' ';
    out += names[t];
    out += '=';
    out += pair_state_char(c.states[t]);
  }
  TreePoset tp = triple_poset(c);
  std::string arcs;
  for (int u = 1; u <= 3; ++u) {
    for (int v = 1; v <= 3; ++v) {
      if (tp.less(u, v)) {
        if (!arcs.empty()) arcs += ", ";
        arcs += sym[u - 1];
        arcs += '<';
        arcs += sym[v - 1];
      }
    }
  }
  out += "  [arcs: " + (arcs.empty() ? std::string("none") : arcs) + "]";
  return out;
}

std::vector<TripleConfig> occurring_triples(int n) {
  if (n < 3 || n > 5) throw std::invalid_argument("occurring_triples: n must be in 3..5");
  std::array<bool, 27> seen{};
  for (const Region& r : enumerate_regions_geometric(n)) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          TripleConfig c{{r.state(i, j), r.state(j, k), r.state(i, k)}};
          seen[c.rank()] = true;
        }
      }
    }
  }
  std::vector<TripleConfig> out;
  for (int r = 0; r < 27; ++r) {
    if (seen[r]) out.push_back(TripleConfig::from_rank(r));
  }
  return out;
}

std::vector<TripleConfig> mine_forbidden_triples(int n) {
  std::array<bool, 27> seen{};
  for (const TripleConfig& c : occurring_triples(n)) seen[c.rank()] = true;
  std::vector<TripleConfig> out;
  for (int r = 0; r < 27; ++r) {
    TripleConfig c = TripleConfig::from_rank(r);
    if (!seen[r] && triple_is_transitive(c)) out.push_back(c);
  }
  return out;
}

}  // namespace shidist
