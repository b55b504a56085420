#include "secantkit/ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace secantkit {

MonomialIdeal zero_ideal(const VarContext& ctx) { return MonomialIdeal(ctx); }

MonomialIdeal unit_ideal(const VarContext& ctx) {
  MonomialIdeal I(ctx);
  I.min_gens.push_back(Monomial::one(ctx.n));
  return I;
}

MonomialIdeal ideal_of_component(const VarContext& ctx, const IrreducibleComponent& c) {
  std::vector<Monomial> gens;
  for (int i = 0; i < ctx.n; ++i) {
    if (c.u[i] > 0) {
      Monomial m = Monomial::one(ctx.n);
      m.e[i] = c.u[i];
      gens.push_back(m);
    }
  }
  return normalize(ctx, std::move(gens));
}

MonomialIdeal normalize(const VarContext& ctx, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.nvars() != ctx.n)
      throw std::invalid_argument("generator does not match variable context");
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool divisible = false;
    for (const auto& k : kept) {
      if (k.divides(g)) { divisible = true; break; }
    }
    if (!divisible) kept.push_back(g);  // sorted by degree, so no later gen divides g
  }
  MonomialIdeal I(ctx);
  I.min_gens = std::move(kept);
  return I;
}

MonomialIdeal make_ideal(const VarContext& ctx, std::vector<Monomial> gens) {
  return normalize(ctx, std::move(gens));
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
  if (m.nvars() != I.ctx.n) throw std::invalid_argument("context mismatch");
  for (const auto& g : I.min_gens)
    if (g.divides(m)) return true;
  return false;
}

bool subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  for (const auto& g : I.min_gens)
    if (!contains(J, g)) return false;
  return true;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ctx != J.ctx) throw std::invalid_argument("context mismatch");
  std::vector<Monomial> gens;
  gens.reserve(I.min_gens.size() * J.min_gens.size());
  for (const auto& a : I.min_gens)
    for (const auto& b : J.min_gens) gens.push_back(a.lcm(b));
  return normalize(I.ctx, std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ctx != J.ctx) throw std::invalid_argument("context mismatch");
  std::vector<Monomial> gens;
  gens.reserve(I.min_gens.size() * J.min_gens.size());
  for (const auto& a : I.min_gens)
    for (const auto& b : J.min_gens) gens.push_back(a * b);
  return normalize(I.ctx, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ctx != J.ctx) throw std::invalid_argument("context mismatch");
  std::vector<Monomial> gens = I.min_gens;
  gens.insert(gens.end(), J.min_gens.begin(), J.min_gens.end());
  return normalize(I.ctx, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ctx != J.ctx) throw std::invalid_argument("context mismatch");
  if (J.is_zero()) return unit_ideal(I.ctx);
  MonomialIdeal result = unit_ideal(I.ctx);
  for (const auto& g : J.min_gens) {
    std::vector<Monomial> per;
    per.reserve(I.min_gens.size());
    for (const auto& h : I.min_gens) per.push_back(h.quotient(g));
    result = intersect(result, normalize(I.ctx, std::move(per)));
  }
  return result;
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> gens = I.min_gens;
  for (auto& g : gens)
    for (auto& v : g.e) v = std::min(v, 1);
  return normalize(I.ctx, std::move(gens));
}

std::vector<Monomial> monomials_up_to(const VarContext& ctx, int d) {
  if (d < 0) throw std::invalid_argument("negative degree bound");
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(ctx.n);
  // depth-first over exponent vectors with running degree cap
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == ctx.n) { out.push_back(cur); return; }
    for (int e = 0; e <= remaining; ++e) {
      cur.e[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur.e[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& I, int d) {
  std::vector<Monomial> out;
  for (auto& m : monomials_up_to(I.ctx, d))
    if (!contains(I, m)) out.push_back(std::move(m));
  return out;
}

namespace {

bool is_irreducible_form(const MonomialIdeal& I) {
  for (const auto& g : I.min_gens) {
    int pos = 0;
    for (int v : g.e)
      if (v > 0) ++pos;
    if (pos != 1) return false;
  }
  return true;
}

std::string ideal_key(const MonomialIdeal& I) {
  std::string k;
  for (const auto& g : I.min_gens) {
    for (int v : g.e) { k += std::to_string(v); k += ','; }
    k += ';';
  }
  return k;
}

void decompose_rec(const MonomialIdeal& I, std::map<std::string, std::vector<IrreducibleComponent>>& memo,
                   std::vector<IrreducibleComponent>& out) {
  if (I.is_zero()) {
    out.push_back(IrreducibleComponent{std::vector<int>(I.ctx.n, 0)});
    return;
  }
  auto it = memo.find(ideal_key(I));
  if (it != memo.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
    return;
  }
  std::vector<IrreducibleComponent> local;
  if (is_irreducible_form(I)) {
    IrreducibleComponent c{std::vector<int>(I.ctx.n, 0)};
    for (const auto& g : I.min_gens)
      for (int i = 0; i < I.ctx.n; ++i)
        if (g.e[i] > 0) c.u[i] = g.e[i];
    local.push_back(std::move(c));
  } else {
    // split a mixed generator x^a = x^{a'} * x_i^{a_i}
    const Monomial* mixed = nullptr;
    for (const auto& g : I.min_gens) {
      int pos = 0;
      for (int v : g.e)
        if (v > 0) ++pos;
      if (pos >= 2) { mixed = &g; break; }
    }
    int i = 0;
    while (mixed->e[i] == 0) ++i;
    Monomial pure = Monomial::one(I.ctx.n);
    pure.e[i] = mixed->e[i];
    Monomial rest = *mixed;
    rest.e[i] = 0;

    std::vector<Monomial> g1 = I.min_gens;
    g1.push_back(pure);
    std::vector<Monomial> g2 = I.min_gens;
    g2.push_back(rest);
    decompose_rec(normalize(I.ctx, std::move(g1)), memo, local);
    decompose_rec(normalize(I.ctx, std::move(g2)), memo, local);
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
  }
  memo.emplace(ideal_key(I), local);
  out.insert(out.end(), local.begin(), local.end());
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::domain_error("unit ideal has no irreducible decomposition");
  std::map<std::string, std::vector<IrreducibleComponent>> memo;
  std::vector<IrreducibleComponent> comps;
  decompose_rec(I, memo, comps);
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

  // irredundancy: drop c when the intersection of the others already sits in m^c
  bool changed = true;
  while (changed && comps.size() > 1) {
    changed = false;
    for (size_t i = 0; i < comps.size(); ++i) {
      MonomialIdeal rest = unit_ideal(I.ctx);
      for (size_t j = 0; j < comps.size(); ++j)
        if (j != i) rest = intersect(rest, ideal_of_component(I.ctx, comps[j]));
      if (subset(rest, ideal_of_component(I.ctx, comps[i]))) {
        comps.erase(comps.begin() + i);
        changed = true;
        break;
      }
    }
  }
  return comps;
}

MonomialIdeal power_box(const VarContext& ctx, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != ctx.n) throw std::invalid_argument("box size mismatch");
  std::vector<Monomial> gens;
  for (int i = 0; i < ctx.n; ++i) {
    if (a[i] < 1) throw std::invalid_argument("box exponents must be positive");
    Monomial m = Monomial::one(ctx.n);
    m.e[i] = a[i];
    gens.push_back(m);
  }
  return normalize(ctx, std::move(gens));
}

MonomialIdeal modulo_box(const MonomialIdeal& I, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != I.ctx.n) throw std::invalid_argument("box size mismatch");
  std::vector<Monomial> gens;
  for (const auto& g : I.min_gens) {
    bool over = false;
    for (int i = 0; i < I.ctx.n; ++i)
      if (g.e[i] >= a[i] + 1) { over = true; break; }
    if (!over) gens.push_back(g);
  }
  return normalize(I.ctx, std::move(gens));
}

std::vector<int> minimal_dual_box(const MonomialIdeal& I) {
  std::vector<int> a(I.ctx.n, 1);
  for (int i = 0; i < I.ctx.n; ++i) a[i] = std::max(I.max_exponent(i), 1);
  return a;
}

MonomialIdeal alexander_dual(const MonomialIdeal& I, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != I.ctx.n) throw std::invalid_argument("box size mismatch");
  for (int i = 0; i < I.ctx.n; ++i)
    if (I.max_exponent(i) > a[i])
      throw std::domain_error("dual box too small for the generators");
  std::vector<int> a1(a);
  for (auto& v : a1) ++v;
  MonomialIdeal box = power_box(I.ctx, a1);
  return modulo_box(colon(box, I), a);
}

}  // namespace secantkit
