#include "secantkit/join.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace secantkit {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Decomposition that tolerates the extreme ideals: the unit ideal is the
// empty intersection, the zero ideal is the single all-zero component.
std::vector<IrreducibleComponent> decompose_for_join(const MonomialIdeal& I) {
  if (I.is_unit()) return {};
  return irreducible_decomposition(I);
}

}  // namespace

FieldChar::FieldChar(long long c) : p(c) {
  if (c != 0 && !is_prime(c))
    throw std::invalid_argument("characteristic must be 0 or a prime");
}

bool char_divides_binomial(long long k, long long l, const FieldChar& p) {
  if (l < 0 || l > k) throw std::invalid_argument("require 0 <= l <= k");
  if (p.is_zero()) return false;
  // Lucas: p | C(k, l) iff some base-p digit of l exceeds the digit of k.
  long long kk = k, ll = l;
  while (ll > 0 || kk > 0) {
    if (ll % p.p > kk % p.p) return true;
    kk /= p.p;
    ll /= p.p;
  }
  return false;
}

IrreducibleComponent join_irreducible(const IrreducibleComponent& u,
                                      const IrreducibleComponent& v,
                                      const FieldChar& p) {
  if (u.u.size() != v.u.size()) throw std::invalid_argument("context mismatch");
  IrreducibleComponent w{std::vector<int>(u.u.size(), 0)};
  for (size_t i = 0; i < u.u.size(); ++i) {
    int ui = u.u[i], vi = v.u[i];
    if (ui == 0 || vi == 0) continue;
    if (p.is_zero()) {
      w.u[i] = ui + vi - 1;
      continue;
    }
    // scan upward; wi = ui + vi - 1 always qualifies since its range is empty
    for (int wi = std::max(ui, vi); wi <= ui + vi - 1; ++wi) {
      bool ok = true;
      for (int l = wi - ui + 1; l < vi && ok; ++l)
        if (!char_divides_binomial(wi, l, p)) ok = false;
      if (ok) { w.u[i] = wi; break; }
    }
  }
  return w;
}

MonomialIdeal join(const MonomialIdeal& I, const MonomialIdeal& J, const FieldChar& p) {
  if (I.ctx != J.ctx) throw std::invalid_argument("context mismatch");
  auto ci = decompose_for_join(I);
  auto cj = decompose_for_join(J);
  MonomialIdeal result = unit_ideal(I.ctx);
  for (const auto& u : ci)
    for (const auto& v : cj) {
      result = intersect(result, ideal_of_component(I.ctx, join_irreducible(u, v, p)));
      if (result.is_zero()) return result;
    }
  return result;
}

namespace {

std::vector<int> default_join_box(const MonomialIdeal& I, const MonomialIdeal& J) {
  std::vector<int> a(I.ctx.n, 1);
  for (int i = 0; i < I.ctx.n; ++i) {
    int d = std::max(I.max_exponent(i), J.max_exponent(i));
    a[i] = std::max(2 * d - 1, 1);
  }
  return a;
}

std::vector<int> default_secant_box(const MonomialIdeal& I, int r) {
  std::vector<int> a(I.ctx.n, 1);
  for (int i = 0; i < I.ctx.n; ++i)
    a[i] = std::max(r * I.max_exponent(i) - r + 1, 1);
  return a;
}

void check_box_at_least(const std::vector<int>& a, const std::vector<int>& need) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < need[i])
      throw std::domain_error("box vector too small for the dual formula");
}

std::vector<int> scaled(const std::vector<int>& a, int k) {
  std::vector<int> r(a);
  for (auto& v : r) v *= k;
  return r;
}

}  // namespace

MonomialIdeal join_alexander(const MonomialIdeal& I, const MonomialIdeal& J,
                             std::optional<std::vector<int>> a_opt) {
  if (I.ctx != J.ctx) throw std::invalid_argument("context mismatch");
  std::vector<int> need = default_join_box(I, J);
  std::vector<int> a = a_opt.value_or(need);
  if (static_cast<int>(a.size()) != I.ctx.n)
    throw std::invalid_argument("box size mismatch");
  check_box_at_least(a, need);
  MonomialIdeal prod = product(alexander_dual(I, a), alexander_dual(J, a));
  return modulo_box(alexander_dual(prod, scaled(a, 2)), a);
}

JoinResult secant(const MonomialIdeal& I, int r, const FieldChar& p,
                  JoinMethod method, std::optional<std::vector<int>> avec,
                  std::optional<int> degree_bound) {
  if (r < 1) throw std::invalid_argument("secant order must be >= 1");
  JoinResult out;
  out.method = method;
  out.field = p;
  if (method == JoinMethod::Oracle) {
    if (!p.is_zero())
      throw std::domain_error("the standard-monomial oracle is characteristic 0 only");
    int d = degree_bound.value_or(r * I.max_gen_degree() + 1);
    return secant_oracle(I, r, d);
  }
  if (method == JoinMethod::Alexander) {
    if (!p.is_zero())
      throw std::domain_error("the dual route is characteristic 0 only");
    if (r == 1) { out.ideal = I; return out; }
    std::vector<int> need = default_secant_box(I, r);
    std::vector<int> a = avec.value_or(need);
    if (static_cast<int>(a.size()) != I.ctx.n)
      throw std::invalid_argument("box size mismatch");
    check_box_at_least(a, need);
    MonomialIdeal dual = alexander_dual(I, a);
    MonomialIdeal pw = dual;
    for (int k = 1; k < r; ++k) pw = product(pw, dual);
    out.ideal = modulo_box(alexander_dual(pw, scaled(a, r)), a);
    return out;
  }
  MonomialIdeal S = I;
  for (int k = 1; k < r; ++k) S = join(S, I, p);
  out.ideal = std::move(S);
  return out;
}

namespace {

// index map over monomials of degree <= d
struct MonomialTable {
  std::vector<Monomial> mons;
  std::map<std::vector<int>, int> index;
  explicit MonomialTable(const VarContext& ctx, int d) : mons(monomials_up_to(ctx, d)) {
    for (size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i].e, static_cast<int>(i));
  }
  int at(const Monomial& m) const { return index.at(m.e); }
};

// standard[k][i]: monomial i splits into k standard monomials of the inputs
void for_each_divisor(const Monomial& m, const std::function<void(const Monomial&)>& f) {
  Monomial cur = Monomial::one(m.nvars());
  auto rec = [&](auto&& self, int var) -> void {
    if (var == m.nvars()) { f(cur); return; }
    for (int e = 0; e <= m.e[var]; ++e) {
      cur.e[var] = e;
      self(self, var + 1);
    }
    cur.e[var] = 0;
  };
  rec(rec, 0);
}

std::vector<Monomial> minimal_nonstandard(const MonomialTable& tab,
                                          const std::vector<char>& standard) {
  std::vector<Monomial> gens;
  for (size_t i = 0; i < tab.mons.size(); ++i) {
    if (standard[i]) continue;
    const Monomial& m = tab.mons[i];
    bool minimal = true;
    for (int v = 0; v < m.nvars() && minimal; ++v) {
      if (m.e[v] == 0) continue;
      Monomial q = m;
      --q.e[v];
      if (!standard[tab.at(q)]) minimal = false;
    }
    if (minimal) gens.push_back(m);
  }
  return gens;
}

}  // namespace

JoinResult secant_oracle(const MonomialIdeal& I, int r, int d) {
  if (r < 1) throw std::invalid_argument("secant order must be >= 1");
  if (d < 1) throw std::invalid_argument("degree bound must be >= 1");
  MonomialTable tab(I.ctx, d);
  size_t n = tab.mons.size();
  std::vector<char> std1(n), cur(n);
  for (size_t i = 0; i < n; ++i) std1[i] = !contains(I, tab.mons[i]);
  cur = std1;
  for (int k = 2; k <= r; ++k) {
    std::vector<char> next(n, 0);
    for (size_t i = 0; i < n; ++i) {
      bool ok = false;
      for_each_divisor(tab.mons[i], [&](const Monomial& m1) {
        if (ok) return;
        if (std1[tab.at(m1)] && cur[tab.at(tab.mons[i].quotient(m1))]) ok = true;
      });
      next[i] = ok;
    }
    cur.swap(next);
  }
  JoinResult out;
  out.method = JoinMethod::Oracle;
  out.field = FieldChar(0);
  out.degree_bound = d;
  out.truncated = true;
  out.ideal = normalize(I.ctx, minimal_nonstandard(tab, cur));
  return out;
}

MonomialIdeal join_oracle(const MonomialIdeal& I, const MonomialIdeal& J, int d) {
  if (I.ctx != J.ctx) throw std::invalid_argument("context mismatch");
  if (d < 1) throw std::invalid_argument("degree bound must be >= 1");
  MonomialTable tab(I.ctx, d);
  size_t n = tab.mons.size();
  std::vector<char> stdI(n), stdJ(n), std2(n, 0);
  for (size_t i = 0; i < n; ++i) {
    stdI[i] = !contains(I, tab.mons[i]);
    stdJ[i] = !contains(J, tab.mons[i]);
  }
  for (size_t i = 0; i < n; ++i) {
    bool ok = false;
    for_each_divisor(tab.mons[i], [&](const Monomial& m1) {
      if (ok) return;
      if (stdI[tab.at(m1)] && stdJ[tab.at(tab.mons[i].quotient(m1))]) ok = true;
    });
    std2[i] = ok;
  }
  return normalize(I.ctx, minimal_nonstandard(tab, std2));
}

}  // namespace secantkit
