#ifndef SECANTKIT_POSET_HPP
#define SECANTKIT_POSET_HPP

#include <string>
#include <utility>
#include <vector>

#include "secantkit/ideal.hpp"

namespace secantkit {

// Finite poset given by covers; the closure is computed once and cached.
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> covers;  // 0-based (lower, upper)
  std::vector<std::vector<char>> leq;       // closed relation, reflexive

  Poset() = default;
  Poset(std::vector<std::string> elems, std::vector<std::pair<int, int>> cov);

  int size() const { return static_cast<int>(elements.size()); }
  bool less_eq(int a, int b) const { return leq[a][b]; }
  bool comparable(int a, int b) const { return leq[a][b] || leq[b][a]; }
  // Induced subposet on a label subset.
  Poset restrict(const std::vector<int>& keep) const;
};

// All k-element antichains, each sorted, listed in lexicographic order.
std::vector<std::vector<int>> antichains(const Poset& P, int k);
int max_antichain_size(const Poset& P);

// Squarefree quadratic ideal of the 2-element antichains, one variable per
// poset element.
MonomialIdeal stanley_reisner_ideal(const Poset& P);

// <m_A : A an antichain of size r+1>.
MonomialIdeal antichain_secant(const Poset& P, int r);

enum class MinorKind { Generic, Symmetric, SkewPfaffian };

struct MinorFamily {
  MinorKind kind = MinorKind::Generic;
  int rows = 0;
  int cols = 0;  // generic only; ignored otherwise
};

// Poset on the matrix-entry labels whose incomparable pairs are the quadratic
// leading terms of the family.
Poset build_poset(const MinorFamily& F);

// Leading terms of the k x k minors (or 2k x 2k sub-Pfaffians) over the
// family's variables, as monomials in the build_poset variable order.
std::vector<Monomial> minor_leading_terms(const MinorFamily& F, int k);

struct WitnessReport {
  bool ok = false;
  std::vector<Monomial> only_antichains;  // antichain monomials missing from the minors
  std::vector<Monomial> only_minors;      // minor terms with no matching antichain
};

// Compares the (k-1)-secant of the poset ideal with the minor leading terms.
WitnessReport minor_witness_check(const MinorFamily& F, int k);

}  // namespace secantkit

#endif
