#include "secantkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace secantkit {

void Graph::add_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("loops are not allowed");
  if (i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("edge endpoint out of range");
  if (i > j) std::swap(i, j);
  edges.emplace(i, j);
}

bool Graph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return edges.count({i, j}) > 0;
}

Graph Graph::complement() const {
  Graph H(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!has_edge(i, j)) H.add_edge(i, j);
  return H;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  Graph G(n);
  for (int i = 1; i < n; ++i) G.add_edge(i, i + 1);
  G.add_edge(n, 1);
  return G;
}

Graph Graph::complete(int n) {
  Graph G(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) G.add_edge(i, j);
  return G;
}

Graph Graph::petersen() {
  Graph G(10);
  for (int i = 1; i <= 5; ++i) {
    G.add_edge(i, i % 5 + 1);
    G.add_edge(i, i + 5);
  }
  int inner[5] = {6, 8, 10, 7, 9};
  for (int i = 0; i < 5; ++i) G.add_edge(inner[i], inner[(i + 1) % 5]);
  return G;
}

std::vector<uint32_t> Graph::adjacency() const {
  std::vector<uint32_t> adj(n, 0);
  for (auto [i, j] : edges) {
    adj[i - 1] |= 1u << (j - 1);
    adj[j - 1] |= 1u << (i - 1);
  }
  return adj;
}

MonomialIdeal edge_ideal(const Graph& G, const VarContext& ctx) {
  if (ctx.n != G.n) throw std::invalid_argument("context mismatch");
  std::vector<Monomial> gens;
  for (auto [i, j] : G.edges) {
    Monomial m = Monomial::one(ctx.n);
    m.e[i - 1] = 1;
    m.e[j - 1] = 1;
    gens.push_back(m);
  }
  return normalize(ctx, std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& G) {
  if (G.n == 0) throw std::invalid_argument("edge ideal needs >= 1 vertex");
  return edge_ideal(G, VarContext(G.n));
}

namespace {

// backtracking proper coloring of the vertices in mask with <= r colors;
// first uncolored vertex may only open one fresh color
bool color_rec(const std::vector<uint32_t>& adj, const std::vector<int>& verts,
               std::vector<int>& color, size_t pos, int used, int r) {
  if (pos == verts.size()) return true;
  int v = verts[pos];
  int cap = std::min(used + 1, r);
  for (int c = 0; c < cap; ++c) {
    bool ok = true;
    for (size_t q = 0; q < pos && ok; ++q)
      if ((adj[v] >> verts[q]) & 1u)
        if (color[verts[q]] == c) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (color_rec(adj, verts, color, pos + 1, std::max(used, c + 1), r)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

bool is_r_colorable(const std::vector<uint32_t>& adj, uint32_t mask, int r) {
  std::vector<int> verts;
  for (size_t v = 0; v < adj.size(); ++v)
    if ((mask >> v) & 1u) verts.push_back(static_cast<int>(v));
  if (verts.empty()) return true;
  if (r <= 0) return false;
  // most-constrained-first ordering
  std::sort(verts.begin(), verts.end(), [&](int a, int b) {
    int da = std::popcount(adj[a] & mask), db = std::popcount(adj[b] & mask);
    if (da != db) return da > db;
    return a < b;
  });
  std::vector<int> color(adj.size(), -1);
  return color_rec(adj, verts, color, 0, 0, r);
}

int clique_number(const Graph& G) {
  auto adj = G.adjacency();
  int best = 0;
  // branch on candidate sets
  auto rec = [&](auto&& self, uint32_t cand, int size) -> void {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) { best = std::max(best, size); return; }
    int v = std::countr_zero(cand);
    self(self, (cand & ~(1u << v)), size);
    self(self, cand & adj[v], size + 1);
  };
  rec(rec, G.n >= 32 ? ~0u : (1u << G.n) - 1, 0);
  return best;
}

int chromatic_number(const Graph& G, const Limits& lim) {
  if (G.n > lim.chromatic_vertices)
    throw std::domain_error("graph exceeds the chromatic enumeration cap");
  if (G.n == 0) return 0;
  if (G.edges.empty()) return 1;
  auto adj = G.adjacency();
  uint32_t full = (G.n >= 32) ? ~0u : (1u << G.n) - 1;
  int r = clique_number(G);
  while (!is_r_colorable(adj, full, r)) ++r;
  return r;
}

std::vector<std::vector<int>> secant_edge_supports(const Graph& G, int r,
                                                   const Limits& lim) {
  if (r < 1) throw std::invalid_argument("secant order must be >= 1");
  if (G.n > lim.secant_vertices)
    throw std::domain_error("graph exceeds the secant enumeration cap");
  auto adj = G.adjacency();
  uint32_t full = (G.n >= 32) ? ~0u : (1u << G.n) - 1;
  std::vector<char> colorable(full + 1, 0);
  for (uint32_t mask = 0; mask <= full; ++mask)
    colorable[mask] = is_r_colorable(adj, mask, r);
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (colorable[mask]) continue;
    bool minimal = true;
    for (int v = 0; v < G.n && minimal; ++v)
      if ((mask >> v) & 1u)
        if (!colorable[mask & ~(1u << v)]) minimal = false;
    if (!minimal) continue;
    std::vector<int> verts;
    for (int v = 0; v < G.n; ++v)
      if ((mask >> v) & 1u) verts.push_back(v + 1);
    out.push_back(std::move(verts));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

MonomialIdeal secant_edge_ideal(const Graph& G, int r, const Limits& lim) {
  VarContext ctx(G.n == 0 ? 1 : G.n);
  std::vector<Monomial> gens;
  for (const auto& verts : secant_edge_supports(G, r, lim)) {
    Monomial m = Monomial::one(ctx.n);
    for (int v : verts) m.e[v - 1] = 1;
    gens.push_back(m);
  }
  return normalize(ctx, std::move(gens));
}

std::vector<std::vector<int>> odd_hole_generators(const Graph& G) {
  auto adj = G.adjacency();
  uint32_t full = (G.n >= 32) ? ~0u : (1u << G.n) - 1;
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    int size = std::popcount(mask);
    if (size < 3 || size % 2 == 0) continue;
    bool twoRegular = true;
    for (int v = 0; v < G.n && twoRegular; ++v)
      if ((mask >> v) & 1u)
        if (std::popcount(adj[v] & mask) != 2) twoRegular = false;
    if (!twoRegular) continue;
    // connected?
    uint32_t seen = mask & (~mask + 1), frontier = seen;
    while (frontier) {
      uint32_t next = 0;
      for (int v = 0; v < G.n; ++v)
        if ((frontier >> v) & 1u) next |= adj[v] & mask;
      frontier = next & ~seen;
      seen |= frontier;
    }
    if (seen != mask) continue;
    std::vector<int> verts;
    for (int v = 0; v < G.n; ++v)
      if ((mask >> v) & 1u) verts.push_back(v + 1);
    out.push_back(std::move(verts));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

int chi_of_mask(const std::vector<uint32_t>& adj, uint32_t mask) {
  if (mask == 0) return 0;
  int r = 1;
  while (!is_r_colorable(adj, mask, r)) ++r;
  return r;
}

int omega_of_mask(const std::vector<uint32_t>& adj, uint32_t mask) {
  int best = 0;
  auto rec = [&](auto&& self, uint32_t cand, int size) -> void {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) { best = std::max(best, size); return; }
    int v = std::countr_zero(cand);
    self(self, cand & ~(1u << v), size);
    self(self, cand & adj[v], size + 1);
  };
  rec(rec, mask, 0);
  return best;
}

}  // namespace

PerfectReport is_perfect(const Graph& G, const Limits& lim) {
  if (G.n > lim.perfect_vertices)
    throw std::domain_error("graph exceeds the perfection enumeration cap");
  auto adj = G.adjacency();
  uint32_t full = (G.n >= 32) ? ~0u : (1u << G.n) - 1;
  std::vector<uint32_t> masks;
  for (uint32_t mask = 1; mask <= full; ++mask) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  for (uint32_t mask : masks) {
    if (chi_of_mask(adj, mask) != omega_of_mask(adj, mask)) {
      PerfectReport rep;
      rep.perfect = false;
      for (int v = 0; v < G.n; ++v)
        if ((mask >> v) & 1u) rep.witness.push_back(v + 1);
      return rep;
    }
  }
  return PerfectReport{};
}

SpgtReport spgt_degree_classification(const Graph& G, int r_max, const Limits& lim) {
  if (is_perfect(G, lim).perfect)
    throw std::domain_error("graph is perfect; no degree classification applies");
  auto degrees_of = [&](int r) {
    std::set<int> degs;
    std::vector<std::vector<int>> supports = secant_edge_supports(G, r, lim);
    for (const auto& s : supports) degs.insert(static_cast<int>(s.size()));
    return std::make_pair(degs, supports);
  };
  auto [deg2, sup2] = degrees_of(2);
  for (const auto& s : sup2) {
    int d = static_cast<int>(s.size());
    if (d % 2 == 1 && d > 3) {
      SpgtReport rep;
      rep.clause = 1;
      rep.r = 2;
      rep.degrees = deg2;
      rep.witness = s;
      return rep;
    }
  }
  for (int r = 3; r <= r_max; ++r) {
    auto [degs, sups] = degrees_of(r);
    if (degs.empty()) break;  // secant became zero without classifying
    if (degs == std::set<int>{r + 1}) continue;
    bool fits = degs.count(2 * r + 1) > 0;
    for (int d : degs)
      if (d != r + 1 && d != 2 * r + 1) fits = false;
    if (!fits) break;
    SpgtReport rep;
    rep.clause = 2;
    rep.r = r;
    rep.degrees = degs;
    for (const auto& s : sups)
      if (static_cast<int>(s.size()) == 2 * r + 1) { rep.witness = s; break; }
    return rep;
  }
  throw std::domain_error("no degree classification found within r_max");
}

Hypergraph::Hypergraph(int nverts, std::vector<std::vector<int>> edges)
    : n(nverts), hyperedges(std::move(edges)) {
  for (auto& e : hyperedges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() < 2)
      throw std::invalid_argument("hyperedges must have >= 2 vertices");
    for (int v : e)
      if (v < 1 || v > n) throw std::invalid_argument("hyperedge vertex out of range");
  }
  for (size_t i = 0; i < hyperedges.size(); ++i)
    for (size_t j = 0; j < hyperedges.size(); ++j)
      if (i != j && std::includes(hyperedges[i].begin(), hyperedges[i].end(),
                                  hyperedges[j].begin(), hyperedges[j].end()))
        throw std::invalid_argument("hyperedges must form an antichain");
}

MonomialIdeal facet_ideal(const Hypergraph& H) {
  if (H.n == 0) throw std::invalid_argument("facet ideal needs >= 1 vertex");
  VarContext ctx(H.n);
  std::vector<Monomial> gens;
  for (const auto& e : H.hyperedges) {
    Monomial m = Monomial::one(ctx.n);
    for (int v : e) m.e[v - 1] = 1;
    gens.push_back(m);
  }
  return normalize(ctx, std::move(gens));
}

namespace {

bool hyper_color_rec(const Hypergraph& H, std::vector<int>& color, int v, int used, int r) {
  if (v > H.n) return true;
  int cap = std::min(used + 1, r);
  for (int c = 0; c < cap; ++c) {
    color[v] = c;
    bool ok = true;
    // only hyperedges fully colored so far can fail
    for (const auto& e : H.hyperedges) {
      if (e.back() != v) continue;
      bool mono = true;
      for (int w : e)
        if (color[w] != c) { mono = false; break; }
      if (mono) { ok = false; break; }
    }
    if (ok && hyper_color_rec(H, color, v + 1, std::max(used, c + 1), r)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

int hypergraph_chromatic(const Hypergraph& H) {
  if (H.n == 0) return 0;
  if (H.hyperedges.empty()) return 1;
  std::vector<int> color(H.n + 1, -1);
  int r = 2;
  while (!hyper_color_rec(H, color, 1, 0, r)) {
    std::fill(color.begin(), color.end(), -1);
    ++r;
  }
  return r;
}

MonomialIdeal ideal_of_quadratic(const QuadraticMonomialIdeal& Q) {
  if (Q.n == 0) throw std::invalid_argument("empty quadratic ideal context");
  VarContext ctx(Q.n);
  std::vector<Monomial> gens;
  for (auto [i, j] : Q.squarefree_edges) {
    Monomial m = Monomial::one(Q.n);
    m.e[i - 1] = 1;
    m.e[j - 1] = 1;
    gens.push_back(m);
  }
  for (int i : Q.square_vertices) {
    Monomial m = Monomial::one(Q.n);
    m.e[i - 1] = 2;
    gens.push_back(m);
  }
  return normalize(ctx, std::move(gens));
}

MonomialIdeal quadratic_secant(const QuadraticMonomialIdeal& Q, int r, const Limits& lim) {
  if (r < 1) throw std::invalid_argument("secant order must be >= 1");
  // Vertex split: x_i^2 in the ideal gets r+1 clique copies so that the
  // power x_i^{r+1} survives the substitution; other variables one copy.
  int m = r + 1;
  std::vector<int> owner;  // blown-up vertex -> original variable
  std::vector<std::vector<int>> copies(Q.n + 1);
  for (int i = 1; i <= Q.n; ++i) {
    int k = Q.square_vertices.count(i) ? m : 1;
    for (int c = 0; c < k; ++c) {
      owner.push_back(i);
      copies[i].push_back(static_cast<int>(owner.size()));
    }
  }
  Graph G(static_cast<int>(owner.size()));
  for (int i = 1; i <= Q.n; ++i) {
    if (Q.square_vertices.count(i))
      for (size_t a = 0; a < copies[i].size(); ++a)
        for (size_t b = a + 1; b < copies[i].size(); ++b)
          G.add_edge(copies[i][a], copies[i][b]);
    for (int j = i + 1; j <= Q.n; ++j)
      if (Q.squarefree_edges.count({i, j}))
        for (int a : copies[i])
          for (int b : copies[j]) G.add_edge(a, b);
  }
  VarContext ctx(Q.n);
  std::vector<Monomial> gens;
  for (const auto& verts : secant_edge_supports(G, r, lim)) {
    Monomial mon = Monomial::one(Q.n);
    for (int v : verts) mon.e[owner[v - 1] - 1] += 1;
    gens.push_back(mon);
  }
  return normalize(ctx, std::move(gens));
}

}  // namespace secantkit
