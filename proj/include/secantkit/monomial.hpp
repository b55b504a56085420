#ifndef SECANTKIT_MONOMIAL_HPP
#define SECANTKIT_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace secantkit {

// Variable context: number of variables plus display names.
struct VarContext {
  int n = 0;
  std::vector<std::string> names;

  VarContext() = default;
  explicit VarContext(int nvars) : n(nvars) {
    if (nvars < 1) throw std::invalid_argument("context needs >= 1 variable");
    names.reserve(nvars);
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  explicit VarContext(std::vector<std::string> vnames) : names(std::move(vnames)) {
    n = static_cast<int>(names.size());
    if (n < 1) throw std::invalid_argument("context needs >= 1 variable");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (names[i] == names[j])
          throw std::invalid_argument("duplicate variable name: " + names[i]);
  }

  bool operator==(const VarContext& o) const { return names == o.names; }
  bool operator!=(const VarContext& o) const { return !(*this == o); }
};

// Monomial as an exponent vector.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {
    for (int v : e)
      if (v < 0) throw std::invalid_argument("negative exponent");
  }
  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
  }
  bool squarefree() const {
    return std::all_of(e.begin(), e.end(), [](int v) { return v <= 1; });
  }

  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }
  // x^a : x^b with exponents max(a-b, 0).
  Monomial quotient(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(e[i] - m.e[i], 0);
    return r;
  }
  Monomial lcm(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(e[i], m.e[i]);
    return r;
  }

  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }
};

// Canonical order: total degree, then lexicographic on exponent vectors.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

}  // namespace secantkit

#endif
