#ifndef SECANTKIT_IO_HPP
#define SECANTKIT_IO_HPP

#include <iosfwd>
#include <string>

#include "secantkit/complex.hpp"
#include "secantkit/graph.hpp"
#include "secantkit/ideal.hpp"
#include "secantkit/poset.hpp"
#include "secantkit/triangulation.hpp"

namespace secantkit {

// Text formats.  '#' starts a comment everywhere; blank lines are skipped.
//
//   ideal:          vars x y z          graph:   graph n     poset:  poset n
//                   x^2 y                        i j                 i < j
//                   zero | 1
//   hypergraph:     hypergraph n        complex: complex n   config: config n d
//                   1 2 3                        1 2 4               <d ints> x n
//                                                void|empty          omega r1 .. rd
//   triangulation:  triangulation
//                   <rank point indices, 0-based>

MonomialIdeal parse_ideal(std::istream& in);
std::string format_ideal(const MonomialIdeal& I);
std::string format_monomial(const VarContext& ctx, const Monomial& m);

Graph parse_graph(std::istream& in);
std::string format_graph(const Graph& G);

Hypergraph parse_hypergraph(std::istream& in);

Poset parse_poset(std::istream& in);

SimplicialComplex parse_complex(std::istream& in);
std::string format_complex(const SimplicialComplex& D);

PointConfiguration parse_config(std::istream& in);
std::string format_config(const PointConfiguration& A);

Triangulation parse_triangulation(std::istream& in, const PointConfiguration& A);
std::string format_triangulation(const Triangulation& T);

// Reads any of the above by dispatching on the first keyword.
MonomialIdeal load_ideal(const std::string& path);
Graph load_graph(const std::string& path);
Hypergraph load_hypergraph(const std::string& path);
Poset load_poset(const std::string& path);
SimplicialComplex load_complex(const std::string& path);
PointConfiguration load_config(const std::string& path);
Triangulation load_triangulation(const std::string& path, const PointConfiguration& A);

}  // namespace secantkit

#endif
