#ifndef SECANTKIT_TEST_HELPERS_HPP
#define SECANTKIT_TEST_HELPERS_HPP

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "secantkit/io.hpp"

namespace sktest {

// Ideal from its text format, header included.
inline secantkit::MonomialIdeal ideal(const std::string& text) {
  std::stringstream ss(text);
  return secantkit::parse_ideal(ss);
}

// Random ideal with n variables, up to g generators of degree <= d.
inline secantkit::MonomialIdeal random_ideal(std::mt19937& rng, int n, int g, int d) {
  using namespace secantkit;
  VarContext ctx(n);
  std::vector<Monomial> gens;
  int count = 1 + static_cast<int>(rng() % g);
  for (int i = 0; i < count; ++i) {
    Monomial m = Monomial::one(n);
    int deg = 1 + static_cast<int>(rng() % d);
    for (int t = 0; t < deg; ++t) m.e[rng() % n] += 1;
    gens.push_back(m);
  }
  return normalize(ctx, gens);
}

inline secantkit::Graph random_graph(std::mt19937& rng, int n, double p_percent = 50) {
  secantkit::Graph G(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (static_cast<double>(rng() % 100) < p_percent) G.add_edge(i, j);
  return G;
}

inline std::string data_path(const std::string& name) {
  return std::string(SECANTKIT_DATA_DIR) + "/" + name;
}

}  // namespace sktest

#endif
