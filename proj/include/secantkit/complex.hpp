#ifndef SECANTKIT_COMPLEX_HPP
#define SECANTKIT_COMPLEX_HPP

#include <vector>

#include "secantkit/ideal.hpp"

namespace secantkit {

// Simplicial complex on vertices 1..n stored by its facets.  The void
// complex (no faces at all) has an empty facet list and is distinguished
// from the empty complex whose single facet is the empty set.
struct SimplicialComplex {
  int n = 0;
  bool void_complex = false;
  std::vector<std::vector<int>> facets;  // sorted vertex lists, an antichain

  SimplicialComplex() = default;
  static SimplicialComplex make(int n, std::vector<std::vector<int>> faces);
  static SimplicialComplex make_void(int n);

  bool is_face(const std::vector<int>& s) const;
  bool operator==(const SimplicialComplex& o) const {
    return n == o.n && void_complex == o.void_complex && facets == o.facets;
  }
};

// Stanley-Reisner correspondence for squarefree ideals.
SimplicialComplex complex_of_ideal(const MonomialIdeal& I);
MonomialIdeal ideal_of_complex(const SimplicialComplex& D);

// Facets of the r-th secant complex: maximal unions of r faces.
SimplicialComplex secant_complex(const SimplicialComplex& D, int r);

// Krull dimension of the squarefree quotient (max facet size) and its degree
// (number of facets of maximal size).  The void complex has dimension -1.
int dimension(const SimplicialComplex& D);
int degree(const SimplicialComplex& D);

// Facets of the cyclic d-polytope on n vertices by the evenness condition.
std::vector<std::vector<int>> cyclic_polytope_facets(int n, int d);

// Compares the secant complex of the independence complex of the complement
// of an n-cycle with the cyclic-polytope facets in dimension 2r.
bool cyclic_polytope_crosscheck(int n, int r);

}  // namespace secantkit

#endif
