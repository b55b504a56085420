#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "secantkit/complex.hpp"
#include "secantkit/io.hpp"
#include "secantkit/join.hpp"
#include "secantkit/poset.hpp"
#include "secantkit/triangulation.hpp"

namespace py = pybind11;
using namespace secantkit;

namespace {

MonomialIdeal ideal_from_gens(const std::vector<std::string>& names,
                              const std::vector<std::vector<int>>& gens) {
  VarContext ctx(names);
  std::vector<Monomial> ms;
  for (const auto& e : gens) ms.push_back(Monomial(e));
  return normalize(ctx, std::move(ms));
}

MonomialIdeal ideal_from_text(const std::string& text) {
  std::stringstream ss(text);
  return parse_ideal(ss);
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph G(n);
  for (auto [i, j] : edges) G.add_edge(i, j);
  return G;
}

JoinMethod method_from_name(const std::string& name) {
  if (name == "decomp") return JoinMethod::Decomposition;
  if (name == "alexander") return JoinMethod::Alexander;
  if (name == "oracle") return JoinMethod::Oracle;
  throw std::invalid_argument("unknown method: " + name);
}

MinorFamily family_from_name(const std::string& name, int rows, int cols) {
  MinorFamily F;
  if (name == "generic") F.kind = MinorKind::Generic;
  else if (name == "symmetric") F.kind = MinorKind::Symmetric;
  else if (name == "pfaffian") F.kind = MinorKind::SkewPfaffian;
  else throw std::invalid_argument("unknown family: " + name);
  F.rows = rows;
  F.cols = cols > 0 ? cols : rows;
  return F;
}

}  // namespace

PYBIND11_MODULE(_secantkit, m) {
  m.doc() = "exact joins and secants of monomial ideals, with combinatorial certificates";

  py::class_<MonomialIdeal>(m, "Ideal")
      .def_static("from_gens", &ideal_from_gens, py::arg("names"), py::arg("gens"))
      .def_static("from_text", &ideal_from_text, py::arg("text"))
      .def_property_readonly("names", [](const MonomialIdeal& I) { return I.ctx.names; })
      .def_property_readonly("gens",
                             [](const MonomialIdeal& I) {
                               std::vector<std::vector<int>> out;
                               for (const auto& g : I.min_gens) out.push_back(g.e);
                               return out;
                             })
      .def("is_zero", &MonomialIdeal::is_zero)
      .def("is_unit", &MonomialIdeal::is_unit)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__repr__", [](const MonomialIdeal& I) { return format_ideal(I); });

  m.def("join",
        [](const MonomialIdeal& I, const MonomialIdeal& J, long long charp) {
          return join(I, J, FieldChar(charp));
        },
        py::arg("I"), py::arg("J"), py::arg("char") = 0);
  m.def("secant",
        [](const MonomialIdeal& I, int r, long long charp, const std::string& method,
           std::optional<int> degree_bound) {
          return secant(I, r, FieldChar(charp), method_from_name(method), std::nullopt,
                        degree_bound)
              .ideal;
        },
        py::arg("I"), py::arg("r"), py::arg("char") = 0, py::arg("method") = "decomp",
        py::arg("degree_bound") = py::none());
  m.def("alexander_dual",
        [](const MonomialIdeal& I, const std::vector<int>& a) { return alexander_dual(I, a); },
        py::arg("I"), py::arg("a"));
  m.def("irreducible_decomposition", [](const MonomialIdeal& I) {
    std::vector<std::vector<int>> out;
    for (const auto& c : irreducible_decomposition(I)) out.push_back(c.u);
    return out;
  });
  m.def("standard_monomials", [](const MonomialIdeal& I, int d) {
    std::vector<std::vector<int>> out;
    for (const auto& mon : standard_monomials(I, d)) out.push_back(mon.e);
    return out;
  });

  py::class_<Graph>(m, "Graph")
      .def_static("from_edges", &graph_from_edges, py::arg("n"), py::arg("edges"))
      .def_static("cycle", &Graph::cycle)
      .def_static("complete", &Graph::complete)
      .def_static("petersen", &Graph::petersen)
      .def("complement", &Graph::complement)
      .def_property_readonly("n", [](const Graph& G) { return G.n; })
      .def_property_readonly("edges", [](const Graph& G) {
        return std::vector<std::pair<int, int>>(G.edges.begin(), G.edges.end());
      });

  m.def("edge_ideal", [](const Graph& G) { return edge_ideal(G); });
  m.def("chromatic_number", [](const Graph& G) { return chromatic_number(G); });
  m.def("secant_edge_ideal", [](const Graph& G, int r) { return secant_edge_ideal(G, r); },
        py::arg("G"), py::arg("r"));
  m.def("odd_holes", &odd_hole_generators);
  m.def("is_perfect", [](const Graph& G) {
    PerfectReport rep = is_perfect(G);
    return py::make_tuple(rep.perfect, rep.witness);
  });

  m.def("minor_check", [](const std::string& family, int rows, int cols, int k) {
    WitnessReport rep = minor_witness_check(family_from_name(family, rows, cols), k);
    return rep.ok;
  }, py::arg("family"), py::arg("rows"), py::arg("cols"), py::arg("k"));
  m.def("antichain_secant_of_family",
        [](const std::string& family, int rows, int cols, int r) {
          return antichain_secant(build_poset(family_from_name(family, rows, cols)), r);
        },
        py::arg("family"), py::arg("rows"), py::arg("cols"), py::arg("r"));

  m.def("cyclic_polytope_facets", &cyclic_polytope_facets, py::arg("n"), py::arg("d"));
  m.def("cyclic_polytope_crosscheck", &cyclic_polytope_crosscheck, py::arg("n"), py::arg("r"));

  py::class_<PointConfiguration>(m, "PointConfiguration")
      .def_property_readonly("points", [](const PointConfiguration& A) { return A.points; })
      .def_property_readonly("rank", [](const PointConfiguration& A) { return A.rank; });
  py::class_<Triangulation>(m, "Triangulation")
      .def_property_readonly("simplices", [](const Triangulation& T) { return T.simplices; });

  m.def("named_config", [](const std::string& name) {
    return build_config(parse_named_config(name));
  });
  m.def("triangulation_from_simplices",
        [](const PointConfiguration& A, std::vector<std::vector<int>> simplices) {
          Triangulation T;
          T.config = A;
          for (auto& s : simplices) std::sort(s.begin(), s.end());
          std::sort(simplices.begin(), simplices.end());
          T.simplices = std::move(simplices);
          return T;
        });
  m.def("lex_triangulation", [](const PointConfiguration& A, const std::vector<int>& order) {
    return lex_triangulation(A, order);
  });
  m.def("validate_triangulation", [](const Triangulation& T) {
    ValidationReport rep = validate_triangulation(T);
    return py::make_tuple(rep.valid, rep.message);
  });
  m.def("is_full", &is_full);
  m.def("nonedge_graph", &nonedge_graph);
  m.def("r_partitionable", [](const Triangulation& T, int r) {
    PartitionReport rep = r_partitionable(T, r);
    return py::make_tuple(rep.count, rep.expected_dim_ok, rep.sets);
  });
  m.def("rook_placement", [](const std::vector<int>& sizes, int s) {
    return rook_placement(sizes, s);
  });
}
