#include "secantkit/poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace secantkit {

Poset::Poset(std::vector<std::string> elems, std::vector<std::pair<int, int>> cov)
    : elements(std::move(elems)), covers(std::move(cov)) {
  int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (elements[i] == elements[j])
        throw std::invalid_argument("duplicate poset element: " + elements[i]);
  leq.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) leq[i][i] = 1;
  for (auto [a, b] : covers) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("cover index out of range");
    leq[a][b] = 1;
  }
  // Warshall closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw std::invalid_argument("cover relation has a cycle");
}

Poset Poset::restrict(const std::vector<int>& keep) const {
  Poset Q;
  std::map<int, int> idx;
  for (int v : keep) {
    if (v < 0 || v >= size()) throw std::invalid_argument("restrict index out of range");
    idx.emplace(v, static_cast<int>(Q.elements.size()));
    Q.elements.push_back(elements[v]);
  }
  int m = static_cast<int>(Q.elements.size());
  Q.leq.assign(m, std::vector<char>(m, 0));
  for (auto [a, ia] : idx)
    for (auto [b, ib] : idx) Q.leq[ia][ib] = leq[a][b];
  // covers of the induced order (relation minus transitive shortcuts)
  for (auto [a, ia] : idx)
    for (auto [b, ib] : idx) {
      if (ia == ib || !Q.leq[ia][ib]) continue;
      bool cover = true;
      for (int c = 0; c < m && cover; ++c)
        if (c != ia && c != ib && Q.leq[ia][c] && Q.leq[c][ib]) cover = false;
      if (cover) Q.covers.emplace_back(ia, ib);
    }
  return Q;
}

namespace {

void antichain_rec(const Poset& P, int k, int start, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  int need = k - static_cast<int>(cur.size());
  for (int v = start; v + need <= P.size(); ++v) {
    bool ok = true;
    for (int u : cur)
      if (P.comparable(u, v)) { ok = false; break; }
    if (!ok) continue;
    cur.push_back(v);
    antichain_rec(P, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> antichains(const Poset& P, int k) {
  if (k < 1) throw std::invalid_argument("antichain size must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  antichain_rec(P, k, 0, cur, out);
  return out;
}

int max_antichain_size(const Poset& P) {
  int k = 0;
  while (!antichains(P, k + 1).empty()) ++k;
  return k;
}

MonomialIdeal stanley_reisner_ideal(const Poset& P) {
  if (P.size() == 0) throw std::invalid_argument("empty poset");
  VarContext ctx(P.elements);
  std::vector<Monomial> gens;
  for (int i = 0; i < P.size(); ++i)
    for (int j = i + 1; j < P.size(); ++j)
      if (!P.comparable(i, j)) {
        Monomial m = Monomial::one(ctx.n);
        m.e[i] = m.e[j] = 1;
        gens.push_back(m);
      }
  return normalize(ctx, std::move(gens));
}

MonomialIdeal antichain_secant(const Poset& P, int r) {
  if (r < 1) throw std::invalid_argument("secant order must be >= 1");
  if (P.size() == 0) throw std::invalid_argument("empty poset");
  VarContext ctx(P.elements);
  std::vector<Monomial> gens;
  for (const auto& A : antichains(P, r + 1)) {
    Monomial m = Monomial::one(ctx.n);
    for (int v : A) m.e[v] = 1;
    gens.push_back(m);
  }
  return normalize(ctx, std::move(gens));
}

namespace {

std::string entry_name(int i, int j) {
  return "x" + std::to_string(i) + std::to_string(j);
}

}  // namespace

Poset build_poset(const MinorFamily& F) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pos;  // (i, j) per label
  switch (F.kind) {
    case MinorKind::Generic: {
      if (F.rows < 1 || F.cols < 1) throw std::invalid_argument("bad matrix size");
      for (int i = 1; i <= F.rows; ++i)
        for (int j = 1; j <= F.cols; ++j) {
          labels.push_back(entry_name(i, j));
          pos.emplace_back(i, j);
        }
      break;
    }
    case MinorKind::Symmetric: {
      if (F.rows < 1) throw std::invalid_argument("bad matrix size");
      for (int i = 1; i <= F.rows; ++i)
        for (int j = i; j <= F.rows; ++j) {
          labels.push_back(entry_name(i, j));
          pos.emplace_back(i, j);
        }
      break;
    }
    case MinorKind::SkewPfaffian: {
      if (F.rows < 2) throw std::invalid_argument("bad matrix size");
      for (int i = 1; i <= F.rows; ++i)
        for (int j = i + 1; j <= F.rows; ++j) {
          labels.push_back(entry_name(i, j));
          pos.emplace_back(i, j);
        }
      break;
    }
  }
  int n = static_cast<int>(labels.size());
  auto below = [&](int a, int b) {
    auto [i, j] = pos[a];
    auto [k, l] = pos[b];
    if (F.kind == MinorKind::SkewPfaffian) return i <= k && j <= l;
    return i <= k && j >= l;  // generic and symmetric share the order rule
  };
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && below(a, b)) covers.emplace_back(a, b);
  return Poset(std::move(labels), std::move(covers));
}

std::vector<Monomial> minor_leading_terms(const MinorFamily& F, int k) {
  if (k < 1) throw std::invalid_argument("minor size must be >= 1");
  Poset P = build_poset(F);  // supplies the variable order
  VarContext ctx(P.elements);
  std::map<std::string, int> var;
  for (int i = 0; i < ctx.n; ++i) var.emplace(ctx.names[i], i);

  std::vector<Monomial> out;
  bool fold = F.kind != MinorKind::Generic;  // map (i,j) to the upper triangle
  auto add_term = [&](const std::vector<std::pair<int, int>>& entries) {
    Monomial m = Monomial::one(ctx.n);
    for (auto [i, j] : entries) {
      if (fold && i > j) std::swap(i, j);
      m.e[var.at(entry_name(i, j))] += 1;
    }
    out.push_back(m);
  };

  auto subsets = [&](int n, int sz) {
    std::vector<std::vector<int>> res;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == sz) { res.push_back(cur); return; }
      for (int v = start; v <= n; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
    return res;
  };

  switch (F.kind) {
    case MinorKind::Generic: {
      if (k > std::min(F.rows, F.cols)) return {};
      for (const auto& R : subsets(F.rows, k))
        for (const auto& C : subsets(F.cols, k)) {
          std::vector<std::pair<int, int>> entries;
          for (int t = 0; t < k; ++t) entries.emplace_back(R[t], C[t]);
          add_term(entries);
        }
      break;
    }
    case MinorKind::Symmetric: {
      if (k > F.rows) return {};
      for (const auto& R : subsets(F.rows, k))
        for (const auto& C : subsets(F.rows, k)) {
          std::vector<std::pair<int, int>> entries;
          for (int t = 0; t < k; ++t) entries.emplace_back(R[t], C[t]);
          add_term(entries);
        }
      break;
    }
    case MinorKind::SkewPfaffian: {
      if (2 * k > F.rows) return {};
      for (const auto& S : subsets(F.rows, 2 * k)) {
        // fully nested matching s_t -- s_{2k+1-t}
        std::vector<std::pair<int, int>> entries;
        for (int t = 0; t < k; ++t) entries.emplace_back(S[t], S[2 * k - 1 - t]);
        add_term(entries);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

WitnessReport minor_witness_check(const MinorFamily& F, int k) {
  if (k < 2) throw std::invalid_argument("witness check needs k >= 2");
  Poset P = build_poset(F);
  MonomialIdeal secant = antichain_secant(P, k - 1);
  std::vector<Monomial> minors = minor_leading_terms(F, k);
  // distinct row/column choices may share a term; compare as generating sets
  MonomialIdeal minor_ideal = normalize(secant.ctx, minors);
  WitnessReport rep;
  rep.ok = secant == minor_ideal;
  if (!rep.ok) {
    for (const auto& g : secant.min_gens)
      if (std::find(minor_ideal.min_gens.begin(), minor_ideal.min_gens.end(), g) ==
          minor_ideal.min_gens.end())
        rep.only_antichains.push_back(g);
    for (const auto& g : minor_ideal.min_gens)
      if (std::find(secant.min_gens.begin(), secant.min_gens.end(), g) ==
          secant.min_gens.end())
        rep.only_minors.push_back(g);
  }
  return rep;
}

}  // namespace secantkit
