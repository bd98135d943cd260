#include "shidist/deletion_lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace shidist {

int DeletionLattice::ell(int vertex) const {
  return poset.size() - std::popcount(vertices[vertex]);
}

DeletionLattice deletion_lattice(const Permutation& p) {
  DeletionLattice dl{InversionPoset(p), {}, {}};
  dl.vertices = dl.poset.ideals();
  std::sort(dl.vertices.begin(), dl.vertices.end(), [](IdealMask a, IdealMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::map<IdealMask, int> index;
  for (int v = 0; v < static_cast<int>(dl.vertices.size()); ++v) index[dl.vertices[v]] = v;
  for (int v = 0; v < static_cast<int>(dl.vertices.size()); ++v) {
    const IdealMask m = dl.vertices[v];
    for (int e = 0; e < dl.poset.size(); ++e) {
      if ((m >> e) & 1) continue;
      if ((dl.poset.down_mask(e) & ~m) != 0) continue;
      dl.edges.push_back({v, index.at(m | (IdealMask{1} << e)), e});
    }
  }
  return dl;
}

}  // namespace shidist
