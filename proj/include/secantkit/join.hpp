#ifndef SECANTKIT_JOIN_HPP
#define SECANTKIT_JOIN_HPP

#include <optional>

#include "secantkit/ideal.hpp"

namespace secantkit {

// Field characteristic: 0 or a prime.
struct FieldChar {
  long long p = 0;
  FieldChar() = default;
  explicit FieldChar(long long c);
  bool is_zero() const { return p == 0; }
};

enum class JoinMethod { Decomposition, Alexander, Oracle };

struct JoinResult {
  MonomialIdeal ideal;
  JoinMethod method = JoinMethod::Decomposition;
  FieldChar field;
  std::optional<int> degree_bound;  // oracle only
  bool truncated = false;           // oracle results may miss generators above the bound
};

// True iff char p divides C(k, l); p = 0 gives false (the binomial is nonzero).
bool char_divides_binomial(long long k, long long l, const FieldChar& p);

// Componentwise join of irreducible ideals (w_i = 0 when either side is 0;
// otherwise the smallest w_i whose binomials all vanish mod p, which is
// u_i + v_i - 1 in characteristic zero).
IrreducibleComponent join_irreducible(const IrreducibleComponent& u,
                                      const IrreducibleComponent& v,
                                      const FieldChar& p);

// Join by irreducible decomposition; valid in any characteristic.
MonomialIdeal join(const MonomialIdeal& I, const MonomialIdeal& J, const FieldChar& p);

// Join through box duals: (I^[a] . J^[a])^[2a] modulo the box.  Characteristic
// zero only; a defaults to the smallest admissible box a_i = max(2 d_i - 1, 1).
MonomialIdeal join_alexander(const MonomialIdeal& I, const MonomialIdeal& J,
                             std::optional<std::vector<int>> a = std::nullopt);

// r-th secant as the r-fold join.
JoinResult secant(const MonomialIdeal& I, int r, const FieldChar& p,
                  JoinMethod method = JoinMethod::Decomposition,
                  std::optional<std::vector<int>> avec = std::nullopt,
                  std::optional<int> degree_bound = std::nullopt);

// Standard-monomial route in characteristic zero: a monomial of degree <= d
// is standard for the r-th secant exactly when it splits into r standard
// monomials of I.  Returns the generators of degree <= d.
JoinResult secant_oracle(const MonomialIdeal& I, int r, int d);

// Same idea for a binary join.
MonomialIdeal join_oracle(const MonomialIdeal& I, const MonomialIdeal& J, int d);

}  // namespace secantkit

#endif
