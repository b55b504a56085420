#ifndef SECANTKIT_GRAPH_HPP
#define SECANTKIT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "secantkit/ideal.hpp"

namespace secantkit {

// Enumeration caps, overridable via the SECANTKIT_LIMIT environment variable
// in the CLI.
struct Limits {
  int chromatic_vertices = 20;
  int secant_vertices = 16;
  int perfect_vertices = 12;
};

// Simple undirected graph on vertices 1..n.
struct Graph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // pairs (i, j) with i < j

  Graph() = default;
  explicit Graph(int nverts) : n(nverts) {
    if (nverts < 0) throw std::invalid_argument("negative vertex count");
  }
  void add_edge(int i, int j);
  bool has_edge(int i, int j) const;
  Graph complement() const;
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph petersen();

  // adjacency bitmasks over 0-based vertices
  std::vector<uint32_t> adjacency() const;
};

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> hyperedges;  // sorted vertex lists, an antichain

  Hypergraph() = default;
  Hypergraph(int nverts, std::vector<std::vector<int>> edges);
};

// Quadratic monomial ideal data: squarefree part plus squared variables.
struct QuadraticMonomialIdeal {
  int n = 0;
  std::set<std::pair<int, int>> squarefree_edges;  // i < j, 1-based
  std::set<int> square_vertices;                   // i with x_i^2 in the ideal
};

MonomialIdeal edge_ideal(const Graph& G);
MonomialIdeal edge_ideal(const Graph& G, const VarContext& ctx);

bool is_r_colorable(const std::vector<uint32_t>& adj, uint32_t mask, int r);
int chromatic_number(const Graph& G, const Limits& lim = {});
int clique_number(const Graph& G);

// Generators of the r-th secant of the edge ideal: minimal vertex sets whose
// induced subgraph is not r-colorable.
MonomialIdeal secant_edge_ideal(const Graph& G, int r, const Limits& lim = {});
std::vector<std::vector<int>> secant_edge_supports(const Graph& G, int r,
                                                   const Limits& lim = {});

// Vertex sets inducing odd cycles (length >= 3).
std::vector<std::vector<int>> odd_hole_generators(const Graph& G);

struct PerfectReport {
  bool perfect = true;
  std::vector<int> witness;  // a minimal induced subgraph with chi > omega
};
PerfectReport is_perfect(const Graph& G, const Limits& lim = {});

// Degree classification of the secants of an imperfect graph: either the
// 2-secant has a generator of odd degree > 3 (clause 1), or some r > 2 has
// generators in degrees r+1 and 2r+1 only while every earlier secant is
// generated in degree s+1 (clause 2).
struct SpgtReport {
  int clause = 0;  // 1 or 2
  int r = 0;
  std::set<int> degrees;            // generator degrees of the r-th secant
  std::vector<int> witness;         // a generator support realizing the clause
};
SpgtReport spgt_degree_classification(const Graph& G, int r_max, const Limits& lim = {});

MonomialIdeal facet_ideal(const Hypergraph& H);
int hypergraph_chromatic(const Hypergraph& H);

MonomialIdeal ideal_of_quadratic(const QuadraticMonomialIdeal& Q);
// Secant of a quadratic monomial ideal via the squarefree vertex-split graph.
MonomialIdeal quadratic_secant(const QuadraticMonomialIdeal& Q, int r,
                               const Limits& lim = {});

}  // namespace secantkit

#endif
