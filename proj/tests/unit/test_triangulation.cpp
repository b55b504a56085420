#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>

#include "helpers.hpp"
#include "secantkit/complex.hpp"
#include "secantkit/triangulation.hpp"

using namespace secantkit;

namespace {

Triangulation veronese_standard() {
  PointConfiguration A = build_config({NamedConfig::Kind::Veronese3, {}});
  return load_triangulation(sktest::data_path("veronese3_standard.tri"), A);
}

std::vector<int> identity_order(const PointConfiguration& A) {
  std::vector<int> order(A.size());
  for (int i = 0; i < A.size(); ++i) order[i] = i;
  return order;
}

}  // namespace

TEST_CASE("named configurations") {
  PointConfiguration v = build_config({NamedConfig::Kind::Veronese3, {}});
  REQUIRE(v.size() == 10);
  CHECK(v.points[0] == std::vector<long long>{3, 0, 0});
  CHECK(v.points[4] == std::vector<long long>{1, 1, 1});
  CHECK(v.points[9] == std::vector<long long>{0, 0, 3});
  CHECK(v.rank == 3);

  PointConfiguration grid = build_config({NamedConfig::Kind::P1xP1O22, {}});
  CHECK(grid.size() == 9);
  CHECK(grid.rank == 3);

  PointConfiguration s11 = build_config({NamedConfig::Kind::Scroll, {1, 1}});
  CHECK(s11.size() == 4);
  CHECK(s11.dim == 3);
  CHECK(s11.rank == 3);

  PointConfiguration seg = build_config({NamedConfig::Kind::Segre, {1, 1}});
  CHECK(seg.size() == 4);
  CHECK(seg.rank == 3);

  CHECK(parse_named_config("scroll:2,5").params == std::vector<int>{2, 5});
  CHECK_THROWS(parse_named_config("mystery"));
}

TEST_CASE("the standard Veronese triangulation validates") {
  Triangulation T = veronese_standard();
  ValidationReport rep = validate_triangulation(T);
  CHECK(rep.valid);
  CHECK(rep.proper_checked);
  CHECK(rep.total_volume == rep.hull_vol);
  CHECK(is_full(T));
}

TEST_CASE("removing a simplex breaks the volume certificate") {
  Triangulation T = veronese_standard();
  T.simplices.pop_back();
  ValidationReport rep = validate_triangulation(T);
  CHECK_FALSE(rep.valid);
  CHECK(rep.message.find("volume") != std::string::npos);
}

TEST_CASE("a collinear simplex fails independence") {
  Triangulation T = veronese_standard();
  T.simplices[0] = {0, 1, 3};  // collinear points on the first row
  ValidationReport rep = validate_triangulation(T);
  CHECK_FALSE(rep.valid);
  CHECK(rep.message.find("degenerate") != std::string::npos);
}

TEST_CASE("stellar subdivision of the corner triangle validates") {
  PointConfiguration A = build_config({NamedConfig::Kind::Veronese3, {}});
  Triangulation T;
  T.config = A;
  T.simplices = {{0, 4, 6}, {0, 4, 9}, {4, 6, 9}};  // cone over the interior point
  ValidationReport rep = validate_triangulation(T);
  CHECK(rep.valid);
  CHECK_FALSE(is_full(T));
}

TEST_CASE("improper overlap with matching volume is caught") {
  Triangulation T = veronese_standard();
  for (auto& s : T.simplices)
    if (s == std::vector<int>{1, 2, 4}) s = {2, 3, 4};  // same volume, overlaps {1,3,4}
  std::sort(T.simplices.begin(), T.simplices.end());
  ValidationReport rep = validate_triangulation(T);
  CHECK_FALSE(rep.valid);
  CHECK(rep.message.find("improper") != std::string::npos);
}

TEST_CASE("fullness detects unused points") {
  PointConfiguration A = build_config({NamedConfig::Kind::Veronese3, {}});
  Triangulation corner;
  corner.config = A;
  corner.simplices = {{0, 6, 9}};  // the three corners only
  CHECK_FALSE(is_full(corner));
  CHECK(is_full(veronese_standard()));
}

TEST_CASE("nonedge graph of a single simplex is empty") {
  PointConfiguration tri =
      make_config({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}},
                  {Rational(1), Rational(0), Rational(0)});
  Triangulation T;
  T.config = tri;
  T.simplices = {{0, 1, 2}};
  REQUIRE(validate_triangulation(T).valid);
  CHECK(nonedge_graph(T).edges.empty());

  PointConfiguration A = build_config({NamedConfig::Kind::Scroll, {1, 1}});
  Triangulation S = lex_triangulation(A, identity_order(A));
  // the square splits into two triangles; only one diagonal is missing
  CHECK(nonedge_graph(S).edges.size() == 1);
}

TEST_CASE("nonedge graph of the standard Veronese triangulation") {
  Triangulation T = veronese_standard();
  Graph G = nonedge_graph(T);
  // 45 pairs minus 18 triangulation edges
  CHECK(G.edges.size() == 27);
  // members printed in the source display (0-based pairs)
  CHECK(G.has_edge(1, 4));   // x0 x3
  CHECK(G.has_edge(1, 5));   // x0 x4
  CHECK(G.has_edge(1, 6));   // x0 x5
  CHECK(G.has_edge(7, 10));  // x6 x9
  CHECK(G.has_edge(8, 10));  // x7 x9
  CHECK_FALSE(G.has_edge(1, 2));
}

TEST_CASE("partitionable counts for the standard Veronese triangulation") {
  Triangulation T = veronese_standard();
  PartitionReport r3 = r_partitionable(T, 3);
  CHECK(r3.count == 4);
  CHECK(r3.expected_dim_ok);
  std::set<std::set<int>> omitted;
  for (const auto& s : r3.sets) {
    std::set<int> full{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, got(s.begin(), s.end());
    std::set<int> diff;
    for (int v : full)
      if (!got.count(v)) diff.insert(v);
    omitted.insert(diff);
  }
  CHECK(omitted == std::set<std::set<int>>{{0}, {4}, {6}, {9}});

  PartitionReport r2 = r_partitionable(T, 2);
  CHECK(r2.count <= 14);
  CHECK(r2.count < 15);
  PartitionReport r1 = r_partitionable(T, 1);
  CHECK(r1.count == static_cast<long long>(T.simplices.size()));
}

TEST_CASE("partitionable sets match the secant complex facets") {
  Triangulation T = veronese_standard();
  std::vector<std::vector<int>> faces;
  for (const auto& s : T.simplices) {
    std::vector<int> f;
    for (int v : s) f.push_back(v + 1);
    faces.push_back(f);
  }
  SimplicialComplex D = SimplicialComplex::make(10, faces);
  for (int r = 2; r <= 3; ++r) {
    PartitionReport rep = r_partitionable(T, r);
    SimplicialComplex S = secant_complex(D, r);
    long long big = 0;
    for (const auto& f : S.facets)
      if (static_cast<int>(f.size()) == 3 * r) ++big;
    CHECK(rep.count == big);
  }
  // the triple-secant facets are the four 9-subsets avoiding one marked point
  SimplicialComplex S3 = secant_complex(D, 3);
  std::vector<std::vector<int>> expect;
  for (int skip : {0, 4, 6, 9}) {
    std::vector<int> f;
    for (int v = 1; v <= 10; ++v)
      if (v != skip + 1) f.push_back(v);
    expect.push_back(f);
  }
  std::sort(expect.begin(), expect.end());
  CHECK(S3.facets == expect);
}

TEST_CASE("placing the unit square gives two triangles") {
  PointConfiguration A = build_config({NamedConfig::Kind::Segre, {1, 1}});
  Triangulation T = lex_triangulation(A, identity_order(A));
  CHECK(T.simplices.size() == 2);
  CHECK(validate_triangulation(T).valid);
  CHECK(is_full(T));
}

TEST_CASE("placing output is always full and valid") {
  std::mt19937 rng(1212);
  std::vector<PointConfiguration> configs = {
      build_config({NamedConfig::Kind::Veronese3, {}}),
      build_config({NamedConfig::Kind::P1xP1O22, {}}),
      build_config({NamedConfig::Kind::Scroll, {2, 3}}),
  };
  for (const auto& A : configs) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<int> order = identity_order(A);
      std::shuffle(order.begin(), order.end(), rng);
      Triangulation T = lex_triangulation(A, order);
      ValidationReport rep = validate_triangulation(T);
      CHECK(rep.valid);
      CHECK(is_full(T));
    }
  }
}

TEST_CASE("placing handles collinear and interior points in random planar configs") {
  std::mt19937 rng(313);
  for (int trial = 0; trial < 12; ++trial) {
    std::set<std::pair<int, int>> cells;
    int count = 4 + static_cast<int>(rng() % 6);
    while (static_cast<int>(cells.size()) < count)
      cells.insert({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)});
    std::vector<std::vector<long long>> pts;
    for (auto [x, y] : cells) pts.push_back({1, x, y});
    PointConfiguration A;
    try {
      A = make_config(pts, {Rational(1), Rational(0), Rational(0)});
    } catch (const std::exception&) {
      continue;
    }
    if (A.rank < 3) continue;  // all points on a line
    std::vector<int> order(A.size());
    for (int i = 0; i < A.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    Triangulation T = lex_triangulation(A, order);
    CHECK(validate_triangulation(T).valid);
    CHECK(is_full(T));
  }
}

TEST_CASE("placing triangulates the cube with exact pairwise certificates") {
  // rank 4, so the pairwise proper-intersection checks run over the LP
  PointConfiguration A = build_config({NamedConfig::Kind::Segre, {1, 1, 1}});
  REQUIRE(A.rank == 4);
  std::mt19937 rng(111);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<int> order = identity_order(A);
    std::shuffle(order.begin(), order.end(), rng);
    Triangulation T = lex_triangulation(A, order);
    ValidationReport rep = validate_triangulation(T);
    CHECK(rep.valid);
    CHECK(rep.proper_checked);
    CHECK(is_full(T));
    // cube triangulations have five or six tetrahedra
    CHECK(T.simplices.size() >= 5);
    CHECK(T.simplices.size() <= 6);
  }
}

TEST_CASE("the first placed vertex of a product of simplices owns one simplex") {
  // neighbors at coordinate-distance one form its only maximal simplex
  PointConfiguration A = build_config({NamedConfig::Kind::Segre, {2, 2}});
  // index of v_{i1 i2} in the lex enumeration is 3*i1 + i2
  auto at = [](int a, int b) { return 3 * a + b; };
  int center = at(1, 1);
  std::vector<int> ball = {center, at(0, 1), at(1, 0), at(1, 2), at(2, 1)};
  std::vector<int> order = {center, at(0, 1), at(1, 0), at(1, 2), at(2, 1),
                            at(0, 0), at(0, 2), at(2, 0), at(2, 2)};
  Triangulation T = lex_triangulation(A, order);
  std::sort(ball.begin(), ball.end());
  int star = 0;
  bool ball_found = false;
  for (const auto& s : T.simplices) {
    if (std::find(s.begin(), s.end(), center) != s.end()) ++star;
    if (s == ball) ball_found = true;
  }
  CHECK(star == 1);
  CHECK(ball_found);
  // rank 5 exceeds the exact pairwise tier: volume-certified only
  ValidationReport rep = validate_triangulation(T);
  CHECK(rep.valid);
  CHECK_FALSE(rep.proper_checked);
  CHECK(is_full(T));
}

TEST_CASE("scroll placings give planar spanning trees") {
  PointConfiguration A = build_config({NamedConfig::Kind::Scroll, {2, 2}});
  std::mt19937 rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<int> order = identity_order(A);
    std::shuffle(order.begin(), order.end(), rng);
    Triangulation T = lex_triangulation(A, order);
    ScrollReport rep = scroll_forbidden_check(T, 2, 2);
    CHECK(rep.tree_ok);
  }
}

TEST_CASE("the shipped scroll triangulation has both claw patterns") {
  PointConfiguration A = build_config({NamedConfig::Kind::Scroll, {2, 5}});
  Triangulation T = load_triangulation(sktest::data_path("scroll25_claws.tri"), A);
  CHECK(validate_triangulation(T).valid);
  CHECK(is_full(T));
  ScrollReport rep = scroll_forbidden_check(T, 2, 5);
  CHECK(rep.tree_ok);
  REQUIRE(rep.interior_claws.size() >= 1);
  CHECK(rep.interior_claws[0].row == 1);
  CHECK(rep.interior_claws[0].center == 1);
  REQUIRE(rep.boundary_claws.size() >= 1);
  CHECK(rep.boundary_claws[0].row == 1);
  CHECK(rep.boundary_claws[0].center == 0);
}

TEST_CASE("the column-major lex triangulation of balanced scrolls is claw-free") {
  for (int m = 1; m <= 3; ++m) {
    PointConfiguration A = build_config({NamedConfig::Kind::Scroll, {m, m}});
    // priority (1,0),(2,0),(1,1),(2,1),...: j ascending, then row
    std::vector<int> order;
    for (int j = 0; j <= m; ++j) {
      order.push_back(j);            // row 1, column j
      order.push_back(m + 1 + j);    // row 2, column j
    }
    Triangulation T = lex_triangulation(A, order);
    CHECK(validate_triangulation(T).valid);
    ScrollReport rep = scroll_forbidden_check(T, m, m);
    CHECK(rep.tree_ok);
    CHECK(rep.interior_claws.empty());
    CHECK(rep.boundary_claws.empty());
    // the tree is the zigzag path: verticals plus the (2,j)-(1,j+1) diagonals
    std::set<std::pair<int, int>> expect;
    for (int j = 0; j <= m; ++j) expect.insert({j, j});
    for (int j = 0; j + 1 <= m; ++j) expect.insert({j + 1, j});
    std::set<std::pair<int, int>> got;
    for (const auto& e : rep.cross_edges) got.insert({e.first.second, e.second.second});
    CHECK(got == expect);
  }
}

TEST_CASE("rook placements") {
  CHECK_FALSE(rook_placement({1, 1}, 2).has_value());
  CHECK_FALSE(rook_placement({2, 2}, 2).has_value());
  auto r4 = rook_placement({3, 3, 3}, 4);
  REQUIRE(r4.has_value());
  for (size_t a = 0; a < r4->size(); ++a)
    for (size_t b = a + 1; b < r4->size(); ++b) {
      int h = 0;
      for (size_t c = 0; c < 3; ++c)
        if ((*r4)[a][c] != (*r4)[b][c]) ++h;
      CHECK(h > 2);
    }
  CHECK_FALSE(rook_placement({3, 3, 3}, 5).has_value());
}

TEST_CASE("grid triangulation built from symmetric minor diagonals") {
  // leading pairs of the 2x2 minors of the symmetric 4-matrix specialize to
  // the 3x3 grid; the complement graph encodes a triangulation whose
  // 2-secant matches the specialized 3x3-minor diagonals
  PointConfiguration A = build_config({NamedConfig::Kind::P1xP1O22, {}});
  // u-labels of the symmetric matrix rows: (0,0),(0,1),(1,0),(1,1)
  std::vector<std::pair<int, int>> u = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  auto grid_index = [](std::pair<int, int> p) { return 3 * p.first + p.second; };
  auto entry = [&](int i, int k) {
    return grid_index({u[i].first + u[k].first, u[i].second + u[k].second});
  };
  std::set<std::pair<int, int>> nonedges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) {
          int p = entry(i, k), q = entry(j, l);
          if (p == q) continue;
          if (p > q) std::swap(p, q);
          nonedges.insert({p, q});
        }
  CHECK(nonedges.size() == 20);
  // triangles = 3-cliques of the complement
  auto is_edge = [&](int p, int q) {
    if (p > q) std::swap(p, q);
    return nonedges.count({p, q}) == 0;
  };
  Triangulation T;
  T.config = A;
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      for (int c = b + 1; c < 9; ++c)
        if (is_edge(a, b) && is_edge(a, c) && is_edge(b, c))
          T.simplices.push_back({a, b, c});
  CHECK(T.simplices.size() == 8);
  CHECK(validate_triangulation(T).valid);
  CHECK(is_full(T));

  Graph G = nonedge_graph(T);
  CHECK(G.edges.size() == nonedges.size());
  for (auto [p, q] : nonedges) CHECK(G.has_edge(p + 1, q + 1));

  // the 2-secant of the nonedge ideal equals the mapped 3x3-minor diagonals
  MonomialIdeal S = secant_edge_ideal(G, 2);
  std::vector<Monomial> mapped;
  for (const auto& t : minor_leading_terms({MinorKind::Symmetric, 4, 0}, 3)) {
    // t lives on the 10 upper-triangular labels x11..x44; remap via u-sums
    Poset P = build_poset({MinorKind::Symmetric, 4, 0});
    Monomial m = Monomial::one(9);
    for (int v = 0; v < P.size(); ++v) {
      if (t.e[v] == 0) continue;
      int i = P.elements[v][1] - '1', j = P.elements[v][2] - '1';
      m.e[grid_index({u[i].first + u[j].first, u[i].second + u[j].second})] += t.e[v];
    }
    mapped.push_back(m);
  }
  CHECK(S == normalize(VarContext(9), mapped));
}
