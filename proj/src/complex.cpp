#include "secantkit/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "secantkit/graph.hpp"

namespace secantkit {

namespace {

std::vector<int> mask_to_verts(uint32_t mask, int n) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1u) v.push_back(i + 1);
  return v;
}

uint32_t verts_to_mask(const std::vector<int>& verts, int n) {
  uint32_t m = 0;
  for (int v : verts) {
    if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
    m |= 1u << (v - 1);
  }
  return m;
}

void sort_face_list(std::vector<std::vector<int>>& faces) {
  for (auto& f : faces) std::sort(f.begin(), f.end());
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::make(int n, std::vector<std::vector<int>> faces) {
  if (n < 1) throw std::invalid_argument("complex needs >= 1 vertex");
  SimplicialComplex D;
  D.n = n;
  sort_face_list(faces);
  // keep only maximal faces
  for (size_t i = 0; i < faces.size(); ++i) {
    bool contained = false;
    for (size_t j = 0; j < faces.size() && !contained; ++j)
      if (i != j && faces[i].size() <= faces[j].size())
        contained = std::includes(faces[j].begin(), faces[j].end(),
                                  faces[i].begin(), faces[i].end()) &&
                    faces[i] != faces[j];
    if (!contained) D.facets.push_back(faces[i]);
  }
  for (const auto& f : D.facets)
    for (int v : f)
      if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
  if (D.facets.empty()) D.facets.push_back({});  // the empty complex
  return D;
}

SimplicialComplex SimplicialComplex::make_void(int n) {
  if (n < 1) throw std::invalid_argument("complex needs >= 1 vertex");
  SimplicialComplex D;
  D.n = n;
  D.void_complex = true;
  return D;
}

bool SimplicialComplex::is_face(const std::vector<int>& s) const {
  if (void_complex) return false;
  for (const auto& f : facets)
    if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
  return false;
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw std::domain_error("ideal is not squarefree");
  int n = I.ctx.n;
  if (n > 25) throw std::domain_error("too many vertices for facet enumeration");
  if (I.is_unit()) return SimplicialComplex::make_void(n);
  uint32_t full = (1u << n) - 1;
  std::vector<uint32_t> gens;
  for (const auto& g : I.min_gens) {
    uint32_t m = 0;
    for (int i = 0; i < n; ++i)
      if (g.e[i] > 0) m |= 1u << i;
    gens.push_back(m);
  }
  std::vector<char> face(full + 1, 1);
  for (uint32_t mask = 0; mask <= full; ++mask)
    for (uint32_t g : gens)
      if ((mask & g) == g) { face[mask] = 0; break; }
  std::vector<std::vector<int>> facets;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    if (!face[mask]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!((mask >> v) & 1u) && face[mask | (1u << v)]) maximal = false;
    if (maximal) facets.push_back(mask_to_verts(mask, n));
  }
  return SimplicialComplex::make(n, std::move(facets));
}

MonomialIdeal ideal_of_complex(const SimplicialComplex& D) {
  VarContext ctx(D.n);
  if (D.void_complex) return unit_ideal(ctx);
  if (D.n > 25) throw std::domain_error("too many vertices for facet enumeration");
  uint32_t full = (1u << D.n) - 1;
  std::vector<uint32_t> fmasks;
  for (const auto& f : D.facets) fmasks.push_back(verts_to_mask(f, D.n));
  std::vector<char> face(full + 1, 0);
  for (uint32_t mask = 0; mask <= full; ++mask)
    for (uint32_t f : fmasks)
      if ((mask & f) == mask) { face[mask] = 1; break; }
  std::vector<Monomial> gens;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (face[mask]) continue;
    bool minimal = true;
    for (int v = 0; v < D.n && minimal; ++v)
      if ((mask >> v) & 1u && !face[mask & ~(1u << v)]) minimal = false;
    if (!minimal) continue;
    Monomial m = Monomial::one(D.n);
    for (int v = 0; v < D.n; ++v)
      if ((mask >> v) & 1u) m.e[v] = 1;
    gens.push_back(m);
  }
  return normalize(ctx, std::move(gens));
}

SimplicialComplex secant_complex(const SimplicialComplex& D, int r) {
  if (r < 1) throw std::invalid_argument("secant order must be >= 1");
  if (D.void_complex) return D;
  std::vector<uint32_t> fmasks;
  for (const auto& f : D.facets) fmasks.push_back(verts_to_mask(f, D.n));
  // unions of r facets dominate unions of r faces
  std::set<uint32_t> unions;
  auto rec = [&](auto&& self, int depth, int start, uint32_t acc) -> void {
    if (depth == r) { unions.insert(acc); return; }
    for (size_t i = start; i < fmasks.size(); ++i)
      self(self, depth + 1, static_cast<int>(i), acc | fmasks[i]);
  };
  rec(rec, 0, 0, 0);
  std::vector<std::vector<int>> faces;
  for (uint32_t u : unions) {
    bool maximal = true;
    for (uint32_t v : unions)
      if (u != v && (u & v) == u) { maximal = false; break; }
    if (maximal) faces.push_back(mask_to_verts(u, D.n));
  }
  return SimplicialComplex::make(D.n, std::move(faces));
}

int dimension(const SimplicialComplex& D) {
  if (D.void_complex) return -1;
  size_t best = 0;
  for (const auto& f : D.facets) best = std::max(best, f.size());
  return static_cast<int>(best);
}

int degree(const SimplicialComplex& D) {
  if (D.void_complex) return 0;
  size_t best = 0;
  for (const auto& f : D.facets) best = std::max(best, f.size());
  int count = 0;
  for (const auto& f : D.facets)
    if (f.size() == best) ++count;
  return count;
}

std::vector<std::vector<int>> cyclic_polytope_facets(int n, int d) {
  if (!(n > d && d >= 2)) throw std::invalid_argument("require n > d >= 2");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == d) {
      std::vector<char> in(n + 1, 0);
      for (int v : cur) in[v] = 1;
      for (int i = 1; i <= n; ++i) {
        if (in[i]) continue;
        for (int j = i + 1; j <= n; ++j) {
          if (in[j]) continue;
          int count = 0;
          for (int t = i; t <= j; ++t) count += in[t];
          if (count % 2 != 0) return;
        }
      }
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

bool cyclic_polytope_crosscheck(int n, int r) {
  if (!(n > 3 && 2 * r <= n - 1)) throw std::invalid_argument("require n > 3 and 2r <= n-1");
  Graph G = Graph::cycle(n).complement();
  SimplicialComplex D = complex_of_ideal(edge_ideal(G));
  SimplicialComplex S = secant_complex(D, r);
  std::vector<std::vector<int>> gale = cyclic_polytope_facets(n, 2 * r);
  sort_face_list(gale);
  return S.facets == gale;
}

}  // namespace secantkit
