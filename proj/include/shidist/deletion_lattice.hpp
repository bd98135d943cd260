#pragma once

#include <vector>

#include "shidist/inversion_poset.hpp"

namespace shidist {

// The inversion-deletion lattice of a permutation: every order ideal of
// IP_p is a vertex (equivalently, the region in which exactly those
// inversions have been converted to incomparabilities), and covering
// edges add one inversion to the ideal. Graded by the number of backward
// arcs l = |inversions| - |ideal|.
struct DeletionLattice {
  struct Edge {
    int from = 0, to = 0;  // vertex indices; to = from plus one element
    int label = 0;         // poset element index of the converted inversion
  };

  InversionPoset poset;
  std::vector<IdealMask> vertices;  // sorted by (size, mask); vertex 0 is the empty ideal
  std::vector<Edge> edges;

  int ell(int vertex) const;  // backward-arc grade of that vertex
  const Inversion& edge_inversion(const Edge& e) const { return poset.elements()[e.label]; }
};

DeletionLattice deletion_lattice(const Permutation& p);

}  // namespace shidist
