#ifndef SECANTKIT_TRIANGULATION_HPP
#define SECANTKIT_TRIANGULATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "secantkit/graph.hpp"
#include "secantkit/rational.hpp"

namespace secantkit {

// Integer point configuration with a homogeneity witness w (w . a_i = 1 for
// every point, checked exactly).  Maximal simplices of a triangulation have
// `rank` points.
struct PointConfiguration {
  std::vector<std::vector<long long>> points;
  int dim = 0;   // coordinate dimension
  int rank = 0;  // linear rank of the points
  std::vector<Rational> omega;
  std::vector<int> basis_cols;  // column positions carrying the rank

  int size() const { return static_cast<int>(points.size()); }
};

PointConfiguration make_config(std::vector<std::vector<long long>> points,
                               std::vector<Rational> omega);

struct NamedConfig {
  enum class Kind { Veronese3, Segre, Scroll, P1xP1O22 } kind = Kind::Veronese3;
  std::vector<int> params;
};

NamedConfig parse_named_config(const std::string& text);
PointConfiguration build_config(const NamedConfig& k);

struct Triangulation {
  PointConfiguration config;
  std::vector<std::vector<int>> simplices;  // sorted rank-subsets of point indices
};

// Normalized volume of one simplex (absolute determinant over the basis
// columns) and of the hull (summed over a constructed triangulation).
long long simplex_volume(const PointConfiguration& A, const std::vector<int>& simplex);
long long hull_volume(const PointConfiguration& A);

struct ValidationReport {
  bool valid = false;
  bool proper_checked = false;  // false means volume-certified only (rank > 4)
  long long total_volume = 0;
  long long hull_vol = 0;
  std::string message;
};

// Independence of every simplex, exact volume accounting, and (rank <= 4)
// pairwise proper intersection.
ValidationReport validate_triangulation(const Triangulation& T);

bool is_full(const Triangulation& T);

// Vertices are point indices (1-based graph over 0-based points: vertex i+1
// is point i); edges are the pairs lying in no maximal simplex.
Graph nonedge_graph(const Triangulation& T);

struct PartitionReport {
  long long count = 0;
  bool expected_dim_ok = false;
  long long degree_lower_bound = 0;
  std::vector<std::vector<int>> sets;  // the r-partitionable subsets
};

// Subsets of size r*rank that split into r pairwise disjoint maximal
// simplices; a positive count certifies the expected secant dimension and
// lower-bounds the secant degree.
PartitionReport r_partitionable(const Triangulation& T, int r);

// Incremental lexicographic (placing) triangulation: points are inserted in
// the given priority order, each coning the boundary facets it sees; points
// landing on the current complex split the simplices containing them.
// Always full and valid.
Triangulation lex_triangulation(const PointConfiguration& A, const std::vector<int>& order);

// Multi-indices on a (d_1+1) x ... x (d_n+1) board with pairwise Hamming
// distance > 2, by exhaustive search in lexicographic order.
std::optional<std::vector<std::vector<int>>> rook_placement(const std::vector<int>& sizes,
                                                            int s);

struct ScrollClaw {
  int row = 0;     // 1 or 2: the row holding the claw center
  int center = 0;  // column index of the center
  std::vector<int> leaves;  // column indices on the other row
  bool boundary = false;    // four-edge corner claw
};

struct ScrollReport {
  bool tree_ok = false;  // cross edges form a planar spanning tree
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> cross_edges;
  std::vector<ScrollClaw> interior_claws;  // three consecutive leaves at an inner center
  std::vector<ScrollClaw> boundary_claws;  // four consecutive leaves at a corner
};

// Scans the bipartite edge tree of a two-row scroll triangulation for the
// claw patterns that obstruct initial/secant commutation.
ScrollReport scroll_forbidden_check(const Triangulation& T, int lambda1, int lambda2);

}  // namespace secantkit

#endif
