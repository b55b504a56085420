#ifndef SECANTKIT_IDEAL_HPP
#define SECANTKIT_IDEAL_HPP

#include <optional>
#include <vector>

#include "secantkit/monomial.hpp"

namespace secantkit {

// Monomial ideal in canonical form: the minimal generators form an antichain
// under divisibility and are sorted by (degree, lex).  The zero ideal is the
// empty list; the unit ideal is the single generator 1.
struct MonomialIdeal {
  VarContext ctx;
  std::vector<Monomial> min_gens;

  MonomialIdeal() = default;
  explicit MonomialIdeal(VarContext c) : ctx(std::move(c)) {}

  bool is_zero() const { return min_gens.empty(); }
  bool is_unit() const { return min_gens.size() == 1 && min_gens[0].is_one(); }
  bool is_squarefree() const {
    for (const auto& g : min_gens)
      if (!g.squarefree()) return false;
    return true;
  }
  int max_gen_degree() const {
    int d = 0;
    for (const auto& g : min_gens) d = std::max(d, g.degree());
    return d;
  }
  // Largest exponent of variable i over all generators.
  int max_exponent(int i) const {
    int d = 0;
    for (const auto& g : min_gens) d = std::max(d, g.e[i]);
    return d;
  }

  bool operator==(const MonomialIdeal& o) const {
    return ctx == o.ctx && min_gens == o.min_gens;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }
};

// Irreducible component m^u = <x_i^{u_i} : u_i > 0>; the all-zero vector is
// the zero ideal.
struct IrreducibleComponent {
  std::vector<int> u;
  bool operator==(const IrreducibleComponent& o) const { return u == o.u; }
  bool operator<(const IrreducibleComponent& o) const { return u < o.u; }
};

MonomialIdeal make_ideal(const VarContext& ctx, std::vector<Monomial> gens);
MonomialIdeal zero_ideal(const VarContext& ctx);
MonomialIdeal unit_ideal(const VarContext& ctx);
MonomialIdeal ideal_of_component(const VarContext& ctx, const IrreducibleComponent& c);

// Canonical minimal-generator form; membership semantics unchanged.
MonomialIdeal normalize(const VarContext& ctx, std::vector<Monomial> gens);

bool contains(const MonomialIdeal& I, const Monomial& m);
bool subset(const MonomialIdeal& I, const MonomialIdeal& J);  // I <= J as sets

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal radical(const MonomialIdeal& I);

// All monomials of degree <= d, canonically sorted.
std::vector<Monomial> monomials_up_to(const VarContext& ctx, int d);
// Monomials of degree <= d outside I, canonically sorted.
std::vector<Monomial> standard_monomials(const MonomialIdeal& I, int d);

// Irredundant irreducible decomposition via recursive generator splitting.
// Rejects the unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

// <x_i^{a_i} : i> with all a_i >= 1.
MonomialIdeal power_box(const VarContext& ctx, const std::vector<int>& a);
// Drop generators divisible by some x_i^{a_i + 1}.
MonomialIdeal modulo_box(const MonomialIdeal& I, const std::vector<int>& a);
// Box dual I^[a], computed as (m^{a+1} : I) modulo the box.  Requires every
// generator to divide x^a.
MonomialIdeal alexander_dual(const MonomialIdeal& I, const std::vector<int>& a);
// Smallest admissible box for alexander_dual.
std::vector<int> minimal_dual_box(const MonomialIdeal& I);

}  // namespace secantkit

#endif
