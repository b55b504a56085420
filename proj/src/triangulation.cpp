#include "secantkit/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace secantkit {

namespace {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// row echelon in place; returns pivot columns
std::vector<int> echelon(RatMat& M) {
  std::vector<int> pivots;
  size_t rows = M.size();
  if (rows == 0) return pivots;
  size_t cols = M[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && M[sel][c].sign() == 0) ++sel;
    if (sel == rows) continue;
    std::swap(M[sel], M[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].sign() == 0) continue;
      Rational f = M[i][c] / M[r][c];
      for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

Rational det(RatMat M) {
  size_t n = M.size();
  Rational d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && M[sel][c].sign() == 0) ++sel;
    if (sel == n) return Rational(0);
    if (sel != c) { std::swap(M[sel], M[c]); d = -d; }
    d *= M[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (M[i][c].sign() == 0) continue;
      Rational f = M[i][c] / M[c][c];
      for (size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
    }
  }
  return d;
}

// solve A x = b (A square, nonsingular)
RatVec solve_square(RatMat A, RatVec b) {
  size_t n = A.size();
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && A[sel][c].sign() == 0) ++sel;
    if (sel == n) throw std::domain_error("singular system");
    std::swap(A[sel], A[c]);
    std::swap(b[sel], b[c]);
    for (size_t i = 0; i < n; ++i) {
      if (i == c || A[i][c].sign() == 0) continue;
      Rational f = A[i][c] / A[c][c];
      for (size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
      b[i] -= f * b[c];
    }
  }
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

// least-structure solve of a (possibly overdetermined) system M x = rhs;
// returns nullopt when inconsistent
std::optional<RatVec> solve_consistent(RatMat M, RatVec rhs) {
  size_t rows = M.size();
  size_t cols = rows ? M[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) M[i].push_back(rhs[i]);
  RatMat aug = M;
  std::vector<int> piv = echelon(aug);
  for (int p : piv)
    if (p == static_cast<int>(cols)) return std::nullopt;  // pivot in rhs column
  RatVec x(cols, Rational(0));
  // back-substitute from the reduced echelon form (echelon() fully reduces)
  size_t r = 0;
  for (int p : piv) {
    x[p] = aug[r][cols] / aug[r][p];
    ++r;
  }
  return x;
}

// ---- tiny exact simplex method: min c.z st Az = b, z >= 0 ----------------

struct LPResult {
  bool feasible = false;
  Rational value;
};

LPResult lp_min(RatMat A, RatVec b, RatVec c) {
  size_t m = A.size();
  size_t n = m ? A[0].size() : 0;
  for (size_t i = 0; i < m; ++i)
    if (b[i].sign() < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  // tableau with artificials appended
  size_t total = n + m;
  RatMat T(m, RatVec(total + 1, Rational(0)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = Rational(1);
    T[i][total] = b[i];
  }
  std::vector<int> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = static_cast<int>(n + i);

  auto pivot = [&](size_t row, size_t col) {
    Rational p = T[row][col];
    for (auto& v : T[row]) v /= p;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || T[i][col].sign() == 0) continue;
      Rational f = T[i][col];
      for (size_t j = 0; j <= total; ++j) T[i][j] -= f * T[row][j];
    }
    basis[row] = static_cast<int>(col);
  };

  auto run = [&](const RatVec& cost, size_t ncols) -> Rational {
    while (true) {
      // reduced costs via the basis (Bland: first negative enters)
      RatVec y(m, Rational(0));  // cost of basic variable per row
      for (size_t i = 0; i < m; ++i) y[i] = cost[basis[i]];
      int enter = -1;
      for (size_t j = 0; j < ncols && enter < 0; ++j) {
        Rational red = cost[j];
        for (size_t i = 0; i < m; ++i) red -= y[i] * T[i][j];
        if (red.sign() < 0) enter = static_cast<int>(j);
      }
      if (enter < 0) break;
      int leave = -1;
      Rational best;
      for (size_t i = 0; i < m; ++i) {
        if (T[i][enter].sign() <= 0) continue;
        Rational ratio = T[i][total] / T[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave]))
          { leave = static_cast<int>(i); best = ratio; }
      }
      if (leave < 0) throw std::domain_error("unbounded LP");
      pivot(static_cast<size_t>(leave), static_cast<size_t>(enter));
    }
    Rational v(0);
    for (size_t i = 0; i < m; ++i) v += cost[basis[i]] * T[i][total];
    return v;
  };

  // phase 1
  RatVec cost1(total, Rational(0));
  for (size_t j = n; j < total; ++j) cost1[j] = Rational(1);
  Rational art = run(cost1, total);
  if (art.sign() != 0) return {false, Rational(0)};
  // drive leftover artificials out of the basis where possible
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] < static_cast<int>(n)) continue;
    bool moved = false;
    for (size_t j = 0; j < n && !moved; ++j)
      if (T[i][j].sign() != 0) { pivot(i, j); moved = true; }
    // a fully zero row is redundant; leave the artificial at value 0
  }
  // phase 2
  RatVec cost2(total, Rational(0));
  for (size_t j = 0; j < n; ++j) cost2[j] = c[j];
  // artificials stay excluded from entering by giving them zero columns only
  // when basic at zero; Bland over the first n columns:
  while (true) {
    RatVec y(m, Rational(0));
    for (size_t i = 0; i < m; ++i) y[i] = cost2[basis[i]];
    int enter = -1;
    for (size_t j = 0; j < n && enter < 0; ++j) {
      Rational red = cost2[j];
      for (size_t i = 0; i < m; ++i) red -= y[i] * T[i][j];
      if (red.sign() < 0) enter = static_cast<int>(j);
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter].sign() <= 0) continue;
      Rational ratio = T[i][total] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave]))
        { leave = static_cast<int>(i); best = ratio; }
    }
    if (leave < 0) throw std::domain_error("unbounded LP");
    pivot(static_cast<size_t>(leave), static_cast<size_t>(enter));
  }
  Rational v(0);
  for (size_t i = 0; i < m; ++i) v += cost2[basis[i]] * T[i][total];
  return {true, v};
}

}  // namespace

PointConfiguration make_config(std::vector<std::vector<long long>> points,
                               std::vector<Rational> omega) {
  if (points.empty()) throw std::invalid_argument("empty configuration");
  size_t d = points[0].size();
  if (d == 0 || omega.size() != d)
    throw std::invalid_argument("witness length must match coordinate dimension");
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("ragged point list");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw std::invalid_argument("duplicate points");
  for (const auto& p : points) {
    Rational dot(0);
    for (size_t c = 0; c < d; ++c) dot += omega[c] * Rational(p[c]);
    if (dot != Rational(1))
      throw std::invalid_argument("homogeneity witness fails on a point");
  }
  PointConfiguration A;
  A.points = std::move(points);
  A.dim = static_cast<int>(d);
  A.omega = std::move(omega);
  RatMat M;
  for (const auto& p : A.points) {
    RatVec row;
    for (long long v : p) row.push_back(Rational(v));
    M.push_back(std::move(row));
  }
  A.basis_cols = echelon(M);
  A.rank = static_cast<int>(A.basis_cols.size());
  return A;
}

NamedConfig parse_named_config(const std::string& text) {
  NamedConfig k;
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  if (head == "veronese3") {
    k.kind = NamedConfig::Kind::Veronese3;
  } else if (head == "p1xp1o22") {
    k.kind = NamedConfig::Kind::P1xP1O22;
  } else if (head == "segre") {
    k.kind = NamedConfig::Kind::Segre;
  } else if (head == "scroll") {
    k.kind = NamedConfig::Kind::Scroll;
  } else {
    throw std::invalid_argument("unknown named configuration: " + text);
  }
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ','))
      k.params.push_back(std::stoi(item));
  }
  if ((k.kind == NamedConfig::Kind::Segre || k.kind == NamedConfig::Kind::Scroll)) {
    if (k.params.empty()) throw std::invalid_argument("missing parameters: " + text);
    for (int p : k.params)
      if (p < 1) throw std::invalid_argument("parameters must be positive");
  }
  return k;
}

PointConfiguration build_config(const NamedConfig& k) {
  std::vector<std::vector<long long>> pts;
  std::vector<Rational> omega;
  switch (k.kind) {
    case NamedConfig::Kind::Veronese3: {
      for (long long a = 3; a >= 0; --a)
        for (long long b = 3 - a; b >= 0; --b) pts.push_back({a, b, 3 - a - b});
      omega = {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
      break;
    }
    case NamedConfig::Kind::P1xP1O22: {
      for (long long a = 0; a <= 2; ++a)
        for (long long b = 0; b <= 2; ++b) pts.push_back({1, a, b});
      omega = {Rational(1), Rational(0), Rational(0)};
      break;
    }
    case NamedConfig::Kind::Segre: {
      int n = static_cast<int>(k.params.size());
      int dim = 0;
      for (int d : k.params) dim += d + 1;
      std::vector<int> idx(n, 0);
      while (true) {
        std::vector<long long> p(dim, 0);
        int off = 0;
        for (int b = 0; b < n; ++b) {
          p[off + idx[b]] = 1;
          off += k.params[b] + 1;
        }
        pts.push_back(std::move(p));
        int b = n - 1;
        while (b >= 0 && idx[b] == k.params[b]) idx[b--] = 0;
        if (b < 0) break;
        ++idx[b];
      }
      omega.assign(dim, Rational(1, n));
      break;
    }
    case NamedConfig::Kind::Scroll: {
      int n = static_cast<int>(k.params.size());
      for (int i = 1; i <= n; ++i)
        for (long long j = 0; j <= k.params[i - 1]; ++j) {
          std::vector<long long> p(n + 1, 0);
          p[0] = j;
          p[i] = 1;
          pts.push_back(std::move(p));
        }
      omega.assign(n + 1, Rational(1));
      omega[0] = Rational(0);
      break;
    }
  }
  return make_config(std::move(pts), std::move(omega));
}

long long simplex_volume(const PointConfiguration& A, const std::vector<int>& simplex) {
  if (static_cast<int>(simplex.size()) != A.rank)
    throw std::invalid_argument("simplex size must equal the configuration rank");
  RatMat M;
  for (int idx : simplex) {
    if (idx < 0 || idx >= A.size()) throw std::invalid_argument("point index out of range");
    RatVec row;
    for (int c : A.basis_cols) row.push_back(Rational(A.points[idx][c]));
    M.push_back(std::move(row));
  }
  Rational d = det(std::move(M));
  if (d.den != 1) throw std::domain_error("non-integer simplex volume");
  return d.num < 0 ? -d.num : d.num;
}

// ---- placing construction -------------------------------------------------

namespace {

struct PlacingState {
  const PointConfiguration* A = nullptr;
  std::vector<int> basis;                 // affine basis point indices
  std::map<int, RatVec> coords;           // affine coordinates per placed point
  std::vector<std::vector<int>> simplices;
  std::vector<int> placed;

  RatVec diff(int p, int q) const {  // p - q as rationals
    RatVec v;
    for (int c = 0; c < A->dim; ++c)
      v.push_back(Rational(A->points[p][c] - A->points[q][c]));
    return v;
  }

  std::optional<RatVec> flat_coords(int p) const {
    if (basis.size() == 1) {
      RatVec d0 = diff(p, basis[0]);
      for (const auto& v : d0)
        if (v.sign() != 0) return std::nullopt;
      return RatVec{};
    }
    RatMat M(A->dim, RatVec(basis.size() - 1));
    for (size_t j = 1; j < basis.size(); ++j) {
      RatVec col = diff(basis[j], basis[0]);
      for (int i = 0; i < A->dim; ++i) M[i][j - 1] = col[i];
    }
    RatVec rhs = diff(p, basis[0]);
    return solve_consistent(std::move(M), std::move(rhs));
  }

  // orientation of x against the hyperplane spanned by facet (within the flat)
  int orient(const std::vector<int>& facet, int x) const {
    size_t k = basis.size() - 1;  // flat dimension
    RatMat M;
    const RatVec& f0 = coords.at(facet[0]);
    for (size_t i = 1; i < facet.size(); ++i) {
      RatVec row = coords.at(facet[i]);
      for (size_t j = 0; j < k; ++j) row[j] -= f0[j];
      M.push_back(std::move(row));
    }
    RatVec row = coords.at(x);
    for (size_t j = 0; j < k; ++j) row[j] -= f0[j];
    M.push_back(std::move(row));
    return det(std::move(M)).sign();
  }

  bool in_closed_simplex(const std::vector<int>& simplex, int p) const {
    size_t k = basis.size() - 1;
    RatMat M(k, RatVec(k));
    const RatVec& v0 = coords.at(simplex[0]);
    for (size_t j = 1; j < simplex.size(); ++j)
      for (size_t i = 0; i < k; ++i) M[i][j - 1] = coords.at(simplex[j])[i] - v0[i];
    RatVec rhs(k);
    for (size_t i = 0; i < k; ++i) rhs[i] = coords.at(p)[i] - v0[i];
    RatVec lam = solve_square(std::move(M), std::move(rhs));
    Rational sum(0);
    for (const auto& l : lam) {
      if (l.sign() < 0) return false;
      sum += l;
    }
    return sum <= Rational(1);
  }
};

}  // namespace

Triangulation lex_triangulation(const PointConfiguration& A, const std::vector<int>& order) {
  {
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < A.size(); ++i)
      if (i >= static_cast<int>(check.size()) || check[i] != i)
        throw std::invalid_argument("order must be a permutation of the point indices");
    if (static_cast<int>(check.size()) != A.size())
      throw std::invalid_argument("order must be a permutation of the point indices");
  }
  PlacingState st;
  st.A = &A;
  for (int p : order) {
    if (st.placed.empty()) {
      st.basis.push_back(p);
      st.coords[p] = {};
      st.placed.push_back(p);
      continue;
    }
    std::optional<RatVec> x = st.flat_coords(p);
    if (!x) {
      // p extends the affine hull: cone the whole complex
      st.basis.push_back(p);
      st.coords.clear();
      for (int q : st.placed) st.coords[q] = *st.flat_coords(q);
      st.coords[p] = *st.flat_coords(p);
      if (st.simplices.empty()) {
        st.simplices.push_back({st.placed[0], p});
      } else {
        for (auto& s : st.simplices) s.push_back(p);
      }
    } else {
      st.coords[p] = *x;
      std::vector<size_t> containing;
      for (size_t i = 0; i < st.simplices.size(); ++i)
        if (st.in_closed_simplex(st.simplices[i], p)) containing.push_back(i);
      if (!containing.empty()) {
        // split every simplex whose closure holds p
        std::vector<std::vector<int>> fresh;
        for (size_t i : containing) {
          const auto& s = st.simplices[i];
          for (size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<int> facet;
            for (size_t t = 0; t < s.size(); ++t)
              if (t != drop) facet.push_back(s[t]);
            if (st.orient(facet, p) != 0) {
              facet.push_back(p);
              fresh.push_back(std::move(facet));
            }
          }
        }
        for (auto it = containing.rbegin(); it != containing.rend(); ++it)
          st.simplices.erase(st.simplices.begin() + *it);
        for (auto& s : fresh) st.simplices.push_back(std::move(s));
      } else {
        // cone the strictly visible part of the boundary
        std::map<std::vector<int>, std::vector<size_t>> facet_owners;
        for (size_t i = 0; i < st.simplices.size(); ++i) {
          const auto& s = st.simplices[i];
          for (size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<int> facet;
            for (size_t t = 0; t < s.size(); ++t)
              if (t != drop) facet.push_back(s[t]);
            std::sort(facet.begin(), facet.end());
            facet_owners[facet].push_back(i);
          }
        }
        bool attached = false;
        for (const auto& [facet, owners] : facet_owners) {
          if (owners.size() != 1) continue;
          const auto& s = st.simplices[owners[0]];
          int apex = -1;
          for (int v : s)
            if (std::find(facet.begin(), facet.end(), v) == facet.end()) apex = v;
          int sp = st.orient(facet, p);
          if (sp != 0 && sp == -st.orient(facet, apex)) {
            std::vector<int> fresh = facet;
            fresh.push_back(p);
            st.simplices.push_back(std::move(fresh));
            attached = true;
          }
        }
        if (!attached)
          throw std::domain_error("placing failed to attach a point");
      }
    }
    st.placed.push_back(p);
  }
  Triangulation T;
  T.config = A;
  for (auto& s : st.simplices) std::sort(s.begin(), s.end());
  std::sort(st.simplices.begin(), st.simplices.end());
  T.simplices = std::move(st.simplices);
  for (const auto& s : T.simplices)
    if (static_cast<int>(s.size()) != A.rank)
      throw std::domain_error("placing produced a degenerate complex");
  return T;
}

long long hull_volume(const PointConfiguration& A) {
  std::vector<int> order(A.size());
  for (int i = 0; i < A.size(); ++i) order[i] = i;
  Triangulation T = lex_triangulation(A, order);
  long long vol = 0;
  for (const auto& s : T.simplices) vol += simplex_volume(A, s);
  return vol;
}

namespace {

// conv(s) meets conv(t) exactly in conv(s & t): the LP that pushes weight
// onto the non-shared vertices of s must be infeasible or bounded by zero
bool proper_pair(const PointConfiguration& A, const std::vector<int>& s,
                 const std::vector<int>& t) {
  std::set<int> shared(s.begin(), s.end());
  std::vector<int> overlap;
  for (int v : t)
    if (shared.count(v)) overlap.push_back(v);
  size_t ns = s.size(), nt = t.size();
  size_t n = ns + nt;
  size_t m = static_cast<size_t>(A.dim) + 2;
  RatMat M(m, RatVec(n, Rational(0)));
  RatVec b(m, Rational(0));
  for (size_t j = 0; j < ns; ++j)
    for (int i = 0; i < A.dim; ++i) M[i][j] = Rational(A.points[s[j]][i]);
  for (size_t j = 0; j < nt; ++j)
    for (int i = 0; i < A.dim; ++i) M[i][ns + j] = Rational(-A.points[t[j]][i]);
  for (size_t j = 0; j < ns; ++j) M[A.dim][j] = Rational(1);
  for (size_t j = 0; j < nt; ++j) M[A.dim + 1][ns + j] = Rational(1);
  b[A.dim] = Rational(1);
  b[A.dim + 1] = Rational(1);
  RatVec c(n, Rational(0));
  std::set<int> tset(t.begin(), t.end());
  for (size_t j = 0; j < ns; ++j)
    if (!tset.count(s[j])) c[j] = Rational(-1);  // maximize via min of negation
  LPResult res = lp_min(std::move(M), std::move(b), std::move(c));
  if (!res.feasible) return true;  // hulls disjoint, vertex sets disjoint too
  return res.value.sign() == 0;
}

}  // namespace

ValidationReport validate_triangulation(const Triangulation& T) {
  ValidationReport rep;
  const PointConfiguration& A = T.config;
  if (T.simplices.empty()) {
    rep.message = "no maximal simplices";
    return rep;
  }
  for (const auto& s : T.simplices) {
    if (static_cast<int>(s.size()) != A.rank) {
      rep.message = "simplex with wrong vertex count";
      return rep;
    }
    std::set<int> uniq(s.begin(), s.end());
    if (static_cast<int>(uniq.size()) != A.rank) {
      rep.message = "simplex with repeated vertices";
      return rep;
    }
    if (simplex_volume(A, s) == 0) {
      rep.message = "degenerate simplex (dependent points)";
      return rep;
    }
  }
  for (const auto& s : T.simplices) rep.total_volume += simplex_volume(A, s);
  rep.hull_vol = hull_volume(A);
  if (rep.total_volume != rep.hull_vol) {
    rep.message = "volumes sum to " + std::to_string(rep.total_volume) + " but the hull has volume " +
                  std::to_string(rep.hull_vol);
    return rep;
  }
  if (A.rank <= 4) {
    for (size_t i = 0; i < T.simplices.size(); ++i)
      for (size_t j = i + 1; j < T.simplices.size(); ++j)
        if (!proper_pair(A, T.simplices[i], T.simplices[j])) {
          rep.message = "improper intersection between simplices";
          return rep;
        }
    rep.proper_checked = true;
    rep.message = "valid";
  } else {
    rep.message = "volume-certified (rank > 4: pairwise intersection not checked)";
  }
  rep.valid = true;
  return rep;
}

bool is_full(const Triangulation& T) {
  std::vector<char> used(T.config.size(), 0);
  for (const auto& s : T.simplices)
    for (int v : s) used[v] = 1;
  return std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
}

Graph nonedge_graph(const Triangulation& T) {
  int n = T.config.size();
  Graph G(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool covered = false;
      for (const auto& s : T.simplices) {
        bool a = std::find(s.begin(), s.end(), i) != s.end();
        bool b = std::find(s.begin(), s.end(), j) != s.end();
        if (a && b) { covered = true; break; }
      }
      if (!covered) G.add_edge(i + 1, j + 1);
    }
  return G;
}

PartitionReport r_partitionable(const Triangulation& T, int r) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  PartitionReport rep;
  std::set<std::vector<int>> unions;
  size_t k = T.simplices.size();
  std::vector<size_t> pick;
  auto rec = [&](auto&& self, size_t start, std::set<int>& acc) -> void {
    if (pick.size() == static_cast<size_t>(r)) {
      unions.insert(std::vector<int>(acc.begin(), acc.end()));
      return;
    }
    for (size_t i = start; i < k; ++i) {
      const auto& s = T.simplices[i];
      bool disjoint = true;
      for (int v : s)
        if (acc.count(v)) { disjoint = false; break; }
      if (!disjoint) continue;
      for (int v : s) acc.insert(v);
      pick.push_back(i);
      self(self, i + 1, acc);
      pick.pop_back();
      for (int v : s) acc.erase(v);
    }
  };
  std::set<int> acc;
  rec(rec, 0, acc);
  rep.sets.assign(unions.begin(), unions.end());
  rep.count = static_cast<long long>(rep.sets.size());
  rep.expected_dim_ok = rep.count > 0;
  rep.degree_lower_bound = rep.count;
  return rep;
}

std::optional<std::vector<std::vector<int>>> rook_placement(const std::vector<int>& sizes,
                                                            int s) {
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  long long cells = 1;
  for (int d : sizes) {
    if (d < 1) throw std::invalid_argument("board sizes must be positive");
    cells *= d + 1;
    if (cells > 200000) throw std::domain_error("board too large for exhaustive search");
  }
  std::vector<std::vector<int>> board;
  std::vector<int> cur(sizes.size(), 0);
  while (true) {
    board.push_back(cur);
    int b = static_cast<int>(sizes.size()) - 1;
    while (b >= 0 && cur[b] == sizes[b]) cur[b--] = 0;
    if (b < 0) break;
    ++cur[b];
  }
  auto far = [&](const std::vector<int>& a, const std::vector<int>& b) {
    int h = 0;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) ++h;
    return h > 2;
  };
  std::vector<std::vector<int>> chosen;
  auto rec = [&](auto&& self, size_t start) -> bool {
    if (static_cast<int>(chosen.size()) == s) return true;
    for (size_t i = start; i < board.size(); ++i) {
      bool ok = true;
      for (const auto& c : chosen)
        if (!far(c, board[i])) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(board[i]);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) return chosen;
  return std::nullopt;
}

ScrollReport scroll_forbidden_check(const Triangulation& T, int lambda1, int lambda2) {
  NamedConfig k;
  k.kind = NamedConfig::Kind::Scroll;
  k.params = {lambda1, lambda2};
  PointConfiguration expect = build_config(k);
  if (T.config.points != expect.points)
    throw std::invalid_argument("configuration is not the stated two-row scroll");

  int row1 = lambda1 + 1;  // indices 0..lambda1 then lambda1+1..end
  ScrollReport rep;
  std::set<std::pair<int, int>> cross;  // (col in row1, col in row2)
  for (const auto& s : T.simplices)
    for (size_t a = 0; a < s.size(); ++a)
      for (size_t b = a + 1; b < s.size(); ++b) {
        int p = s[a], q = s[b];
        if (p > q) std::swap(p, q);
        if (p < row1 && q >= row1) cross.emplace(p, q - row1);
      }
  for (auto [i, j] : cross)
    rep.cross_edges.push_back({{1, i}, {2, j}});

  // spanning planar tree check
  bool planar = true;
  for (auto [i, j] : cross)
    for (auto [k2, l] : cross)
      if (i < k2 && j > l) planar = false;
  std::vector<char> seen1(lambda1 + 1, 0), seen2(lambda2 + 1, 0);
  for (auto [i, j] : cross) { seen1[i] = 1; seen2[j] = 1; }
  bool spanning = std::all_of(seen1.begin(), seen1.end(), [](char c) { return c != 0; }) &&
                  std::all_of(seen2.begin(), seen2.end(), [](char c) { return c != 0; });
  rep.tree_ok = planar && spanning &&
                static_cast<int>(cross.size()) == lambda1 + lambda2 + 1;

  auto has = [&](int i, int j) { return cross.count({i, j}) > 0; };
  for (int i = 1; i <= lambda1 - 1; ++i)
    for (int j = 0; j <= lambda2 - 2; ++j)
      if (has(i, j) && has(i, j + 1) && has(i, j + 2))
        rep.interior_claws.push_back({1, i, {j, j + 1, j + 2}, false});
  for (int j = 1; j <= lambda2 - 1; ++j)
    for (int i = 0; i <= lambda1 - 2; ++i)
      if (has(i, j) && has(i + 1, j) && has(i + 2, j))
        rep.interior_claws.push_back({2, j, {i, i + 1, i + 2}, false});
  if (lambda2 >= 3) {
    if (has(0, 0) && has(0, 1) && has(0, 2) && has(0, 3))
      rep.boundary_claws.push_back({1, 0, {0, 1, 2, 3}, true});
    if (has(lambda1, lambda2) && has(lambda1, lambda2 - 1) && has(lambda1, lambda2 - 2) &&
        has(lambda1, lambda2 - 3))
      rep.boundary_claws.push_back(
          {1, lambda1, {lambda2 - 3, lambda2 - 2, lambda2 - 1, lambda2}, true});
  }
  if (lambda1 >= 3) {
    if (has(0, 0) && has(1, 0) && has(2, 0) && has(3, 0))
      rep.boundary_claws.push_back({2, 0, {0, 1, 2, 3}, true});
    if (has(lambda1, lambda2) && has(lambda1 - 1, lambda2) && has(lambda1 - 2, lambda2) &&
        has(lambda1 - 3, lambda2))
      rep.boundary_claws.push_back(
          {2, lambda2, {lambda1 - 3, lambda1 - 2, lambda1 - 1, lambda1}, true});
  }
  return rep;
}

}  // namespace secantkit
