#include <doctest.h>

#include "helpers.hpp"
#include "secantkit/complex.hpp"
#include "secantkit/graph.hpp"
#include "secantkit/join.hpp"

using namespace secantkit;
using sktest::ideal;

TEST_CASE("complex of an edge ideal lists the maximal independent sets") {
  SimplicialComplex D = complex_of_ideal(edge_ideal(Graph::cycle(5)));
  REQUIRE(D.facets.size() == 5);
  for (const auto& f : D.facets) CHECK(f.size() == 2);
  CHECK(D.is_face({1, 3}));
  CHECK_FALSE(D.is_face({1, 2}));
}

TEST_CASE("zero and unit ideals map to the full simplex and the void complex") {
  MonomialIdeal Z = ideal("vars x1 x2 x3\nzero\n");
  SimplicialComplex full = complex_of_ideal(Z);
  REQUIRE(full.facets.size() == 1);
  CHECK(full.facets[0] == std::vector<int>{1, 2, 3});

  MonomialIdeal U = ideal("vars x1 x2 x3\n1\n");
  SimplicialComplex v = complex_of_ideal(U);
  CHECK(v.void_complex);
  CHECK(ideal_of_complex(v) == U);
}

TEST_CASE("the product of all variables cuts out the simplex boundary") {
  MonomialIdeal I = ideal("vars x1 x2 x3 x4\nx1 x2 x3 x4\n");
  SimplicialComplex D = complex_of_ideal(I);
  CHECK(D.facets.size() == 4);
  for (const auto& f : D.facets) CHECK(f.size() == 3);
}

TEST_CASE("round trip between squarefree ideals and complexes") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    MonomialIdeal I = radical(sktest::random_ideal(rng, 2 + rng() % 4, 4, 3));
    CHECK(ideal_of_complex(complex_of_ideal(I)) == I);
  }
  CHECK_THROWS(complex_of_ideal(ideal("vars x y\nx^2\n")));
}

TEST_CASE("secant complexes") {
  SimplicialComplex D = complex_of_ideal(edge_ideal(Graph::cycle(5)));
  SimplicialComplex S = secant_complex(D, 2);
  REQUIRE(S.facets.size() == 5);
  for (const auto& f : S.facets) CHECK(f.size() == 4);
  CHECK(secant_complex(D, 1) == D);
}

TEST_CASE("secant complexes commute with ideal secants") {
  std::mt19937 rng(707);
  FieldChar zero(0);
  for (int trial = 0; trial < 12; ++trial) {
    MonomialIdeal I = radical(sktest::random_ideal(rng, 3 + rng() % 6, 4, 3));
    if (I.is_unit()) continue;
    SimplicialComplex D = complex_of_ideal(I);
    for (int r = 2; r <= 3; ++r)
      CHECK(secant_complex(D, r) == complex_of_ideal(secant(I, r, zero).ideal));
  }
}

TEST_CASE("dimension and degree") {
  SimplicialComplex D = complex_of_ideal(edge_ideal(Graph::cycle(5)));
  CHECK(dimension(D) == 2);
  CHECK(degree(D) == 5);

  MonomialIdeal Z = ideal("vars x1 x2 x3 x4\nzero\n");
  SimplicialComplex full = complex_of_ideal(Z);
  CHECK(dimension(full) == 4);
  CHECK(degree(full) == 1);

  CHECK(dimension(SimplicialComplex::make_void(3)) == -1);
}

TEST_CASE("dimension of a secant complex is bounded by r times the dimension") {
  std::mt19937 rng(909);
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal I = radical(sktest::random_ideal(rng, 3 + rng() % 4, 4, 2));
    if (I.is_unit()) continue;
    SimplicialComplex D = complex_of_ideal(I);
    for (int r = 2; r <= 3; ++r)
      CHECK(dimension(secant_complex(D, r)) <= r * dimension(D));
  }
}

TEST_CASE("cyclic polytope facets by the evenness condition") {
  CHECK(cyclic_polytope_facets(5, 4).size() == 5);
  CHECK(cyclic_polytope_facets(6, 4).size() == 9);
  CHECK(cyclic_polytope_facets(7, 4).size() == 14);
}

TEST_CASE("cyclic polytope crosschecks") {
  CHECK(cyclic_polytope_crosscheck(6, 2));
  CHECK(cyclic_polytope_crosscheck(7, 2));
  CHECK(cyclic_polytope_crosscheck(8, 2));
  CHECK(cyclic_polytope_crosscheck(8, 3));
  CHECK(cyclic_polytope_crosscheck(5, 2));
  CHECK(cyclic_polytope_crosscheck(7, 3));
}

TEST_CASE("odd boundary cases carry the top-degree generator") {
  FieldChar zero(0);
  // n = 2r+1: the secant of the cycle-complement edge ideal is principal of
  // degree 2r+1
  for (int r = 2; r <= 3; ++r) {
    int n = 2 * r + 1;
    MonomialIdeal I = edge_ideal(Graph::cycle(n).complement());
    MonomialIdeal S = secant(I, r, zero).ideal;
    REQUIRE(S.min_gens.size() == 1);
    CHECK(S.min_gens[0].degree() == n);
  }
}
