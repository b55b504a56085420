#include "secantkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "secantkit/io.hpp"
#include "secantkit/join.hpp"

namespace secantkit {

namespace {

using nlohmann::json;

Limits env_limits() {
  Limits lim;
  if (const char* s = std::getenv("SECANTKIT_LIMIT")) {
    int v = std::atoi(s);
    if (v > 0) {
      lim.chromatic_vertices = v;
      lim.secant_vertices = v;
      lim.perfect_vertices = v;
    }
  }
  return lim;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

json ideal_json(const MonomialIdeal& I) {
  json j;
  j["vars"] = I.ctx.names;
  j["zero"] = I.is_zero();
  json gens = json::array();
  for (const auto& g : I.min_gens) gens.push_back(g.e);
  j["gens"] = gens;
  return j;
}

json complex_json(const SimplicialComplex& D) {
  json j;
  j["n"] = D.n;
  j["void"] = D.void_complex;
  j["facets"] = D.facets;
  return j;
}

struct Ctx {
  bool as_json = false;
  std::ostream* out = nullptr;
  Limits lim;

  void emit_ideal(const MonomialIdeal& I) {
    if (as_json)
      *out << ideal_json(I).dump(2) << "\n";
    else
      *out << format_ideal(I);
  }
  void emit(const json& j, const std::string& text) {
    if (as_json)
      *out << j.dump(2) << "\n";
    else
      *out << text;
  }
};

JoinMethod parse_method(const std::string& m) {
  if (m == "decomp") return JoinMethod::Decomposition;
  if (m == "alexander") return JoinMethod::Alexander;
  if (m == "oracle") return JoinMethod::Oracle;
  throw CLI::ValidationError("--method", "unknown method: " + m);
}

PointConfiguration config_from_flags(const std::string& named, const std::string& file) {
  if (!named.empty() && !file.empty())
    throw CLI::ValidationError("--named", "give either --named or --config, not both");
  if (!named.empty()) return build_config(parse_named_config(named));
  if (!file.empty()) return load_config(file);
  throw CLI::ValidationError("--named", "a configuration is required (--named or --config)");
}

std::string verts_line(const std::vector<int>& vs) {
  std::string line;
  for (int v : vs) line += (line.empty() ? "" : " ") + std::to_string(v);
  return line;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"secantkit: exact joins, secants, and triangulation certificates"};
  app.require_subcommand(1);
  Ctx ctx;
  ctx.out = &out;
  ctx.lim = env_limits();
  app.add_flag("--json", ctx.as_json, "mirror the report as JSON");

  // shared option storage
  std::string fileA, fileB, method = "decomp", avec_str, named, config_file, family;
  std::string order_str, sizes_str;
  int r = 2, deg = -1, charp = 0, kflag = -1, rows = 0, cols = 0, nflag = 0, sflag = 1;
  long long true_degree = -1;

  auto* join_cmd = app.add_subcommand("join", "join of two monomial ideals");
  join_cmd->add_option("A", fileA, "first ideal file")->required();
  join_cmd->add_option("B", fileB, "second ideal file")->required();
  join_cmd->add_option("--char", charp, "field characteristic (0 or a prime)");
  join_cmd->add_option("--method", method, "decomp | alexander | oracle | all");
  join_cmd->add_option("--degree-bound", deg, "degree bound for the oracle route");
  join_cmd->add_option("--avec", avec_str, "box vector a1,...,an for the dual route");

  auto* secant_cmd = app.add_subcommand("secant", "r-th secant of a monomial ideal");
  secant_cmd->add_option("I", fileA, "ideal file")->required();
  secant_cmd->add_option("--r", r, "secant order")->required();
  secant_cmd->add_option("--char", charp, "field characteristic (0 or a prime)");
  secant_cmd->add_option("--method", method, "decomp | alexander | oracle | all");
  secant_cmd->add_option("--degree-bound", deg, "degree bound for the oracle route");
  secant_cmd->add_option("--avec", avec_str, "box vector a1,...,an for the dual route");

  auto* dual_cmd = app.add_subcommand("dual", "box dual of a monomial ideal");
  dual_cmd->add_option("I", fileA, "ideal file")->required();
  dual_cmd->add_option("--avec", avec_str, "box vector a1,...,an (default: tight box)");

  auto* dec_cmd = app.add_subcommand("decompose", "irreducible decomposition");
  dec_cmd->add_option("I", fileA, "ideal file")->required();

  auto* std_cmd = app.add_subcommand("standard", "standard monomials up to a degree");
  std_cmd->add_option("I", fileA, "ideal file")->required();
  std_cmd->add_option("--deg", deg, "degree bound")->required();

  auto* chrom_cmd = app.add_subcommand("chromatic", "chromatic number of a graph");
  chrom_cmd->add_option("G", fileA, "graph file")->required();

  auto* esec_cmd = app.add_subcommand("edge-secant", "secant of an edge ideal");
  esec_cmd->add_option("G", fileA, "graph file")->required();
  esec_cmd->add_option("--r", r, "secant order")->required();

  auto* perfect_cmd = app.add_subcommand("perfect", "perfection check with witness");
  perfect_cmd->add_option("G", fileA, "graph file")->required();

  auto* holes_cmd = app.add_subcommand("odd-holes", "vertex sets inducing odd cycles");
  holes_cmd->add_option("G", fileA, "graph file")->required();

  auto* hchrom_cmd = app.add_subcommand("hyper-chromatic", "hypergraph chromatic number");
  hchrom_cmd->add_option("H", fileA, "hypergraph file")->required();

  auto* psec_cmd = app.add_subcommand("poset-secant", "antichain secant of a poset ideal");
  psec_cmd->add_option("P", fileA, "poset file")->required();
  psec_cmd->add_option("--r", r, "secant order")->required();

  auto* minor_cmd = app.add_subcommand("minor-check", "antichain vs minor leading terms");
  minor_cmd->add_option("--family", family, "generic | symmetric | pfaffian")->required();
  minor_cmd->add_option("--rows", rows, "matrix rows")->required();
  minor_cmd->add_option("--cols", cols, "matrix cols (generic only)");
  minor_cmd->add_option("--k", kflag, "minor size (default: every feasible k)");

  auto* csec_cmd = app.add_subcommand("complex-secant", "secant complex");
  csec_cmd->add_option("C", fileA, "complex file")->required();
  csec_cmd->add_option("--r", r, "secant order")->required();

  auto* cyc_cmd = app.add_subcommand("cyclic-check", "cyclic-polytope facet crosscheck");
  cyc_cmd->add_option("--n", nflag, "cycle length")->required();
  cyc_cmd->add_option("--r", r, "secant order")->required();

  auto* tval_cmd = app.add_subcommand("tri-validate", "validate a triangulation");
  tval_cmd->add_option("T", fileB, "triangulation file")->required();
  tval_cmd->add_option("--named", named, "named configuration");
  tval_cmd->add_option("--config", config_file, "configuration file");

  auto* tpart_cmd = app.add_subcommand("tri-partitionable", "r-partitionable counting");
  tpart_cmd->add_option("T", fileB, "triangulation file")->required();
  tpart_cmd->add_option("--named", named, "named configuration");
  tpart_cmd->add_option("--config", config_file, "configuration file");
  tpart_cmd->add_option("--r", r, "number of disjoint simplices")->required();
  tpart_cmd->add_option("--true-degree", true_degree, "known secant degree to compare");

  auto* tne_cmd = app.add_subcommand("tri-nonedges", "pairs outside every simplex");
  tne_cmd->add_option("T", fileB, "triangulation file")->required();
  tne_cmd->add_option("--named", named, "named configuration");
  tne_cmd->add_option("--config", config_file, "configuration file");

  auto* pull_cmd = app.add_subcommand("pulling", "lexicographic (placing) triangulation");
  pull_cmd->add_option("--named", named, "named configuration");
  pull_cmd->add_option("--config", config_file, "configuration file");
  pull_cmd->add_option("--order", order_str, "comma-separated point priority (default 0,1,...)");

  auto* rooks_cmd = app.add_subcommand("rooks", "non-attacking rook placement search");
  rooks_cmd->add_option("--sizes", sizes_str, "board sizes d1,...,dn")->required();
  rooks_cmd->add_option("--s", sflag, "number of rooks")->required();

  auto* scroll_cmd = app.add_subcommand("scroll-check", "forbidden claw scan for scrolls");
  scroll_cmd->add_option("T", fileB, "triangulation file")->required();
  scroll_cmd->add_option("--named", named, "scroll:l1,l2 configuration")->required();

  // let --json appear on either side of the verb
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string prog = "secantkit";
  argv.push_back(prog.data());
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    std::optional<std::vector<int>> avec;
    if (!avec_str.empty()) avec = parse_int_list(avec_str);

    if (*join_cmd || *secant_cmd) {
      MonomialIdeal I = load_ideal(fileA);
      FieldChar p(charp);
      int order = *join_cmd ? 2 : r;
      if (deg <= 0) {
        deg = *join_cmd ? I.max_gen_degree() + load_ideal(fileB).max_gen_degree() + 1
                        : order * I.max_gen_degree() + 1;
      }
      auto run_method = [&](JoinMethod m) {
        if (*join_cmd) {
          MonomialIdeal J = load_ideal(fileB);
          if (m == JoinMethod::Decomposition) return join(I, J, p);
          if (m == JoinMethod::Alexander) {
            if (!p.is_zero()) throw std::domain_error("the dual route is characteristic 0 only");
            return join_alexander(I, J, avec);
          }
          if (!p.is_zero()) throw std::domain_error("the oracle route is characteristic 0 only");
          return join_oracle(I, J, deg);
        }
        return secant(I, order, p, m, avec, deg).ideal;
      };
      if (method == "all") {
        MonomialIdeal a = run_method(JoinMethod::Decomposition);
        MonomialIdeal b = run_method(JoinMethod::Alexander);
        MonomialIdeal c = run_method(JoinMethod::Oracle);
        std::vector<Monomial> kept;
        for (const auto& g : a.min_gens)
          if (g.degree() <= deg) kept.push_back(g);
        MonomialIdeal a_cut = normalize(a.ctx, kept);
        if (a != b || a_cut != c) {
          err << "route disagreement\n-- decomposition --\n" << format_ideal(a)
              << "-- dual route --\n" << format_ideal(b)
              << "-- oracle (degree <= " << deg << ") --\n" << format_ideal(c);
          return 1;
        }
        ctx.emit_ideal(a);
      } else {
        JoinMethod m = parse_method(method);
        MonomialIdeal result = run_method(m);
        if (ctx.as_json && m == JoinMethod::Oracle) {
          json j = ideal_json(result);
          j["degree_bound"] = deg;
          j["truncated"] = true;  // generators above the bound are not certified
          out << j.dump(2) << "\n";
        } else {
          ctx.emit_ideal(result);
        }
      }
      return 0;
    }
    if (*dual_cmd) {
      MonomialIdeal I = load_ideal(fileA);
      std::vector<int> a = avec ? *avec : minimal_dual_box(I);
      ctx.emit_ideal(alexander_dual(I, a));
      return 0;
    }
    if (*dec_cmd) {
      MonomialIdeal I = load_ideal(fileA);
      auto comps = irreducible_decomposition(I);
      json j;
      j["components"] = json::array();
      std::string text;
      for (const auto& c : comps) {
        j["components"].push_back(c.u);
        Monomial m(c.u);
        text += format_monomial(I.ctx, m) + "\n";
      }
      ctx.emit(j, text);
      return 0;
    }
    if (*std_cmd) {
      MonomialIdeal I = load_ideal(fileA);
      auto mons = standard_monomials(I, deg);
      json j;
      j["standard"] = json::array();
      std::string text;
      for (const auto& m : mons) {
        j["standard"].push_back(m.e);
        text += format_monomial(I.ctx, m) + "\n";
      }
      ctx.emit(j, text);
      return 0;
    }
    if (*chrom_cmd) {
      int chi = chromatic_number(load_graph(fileA), ctx.lim);
      ctx.emit(json{{"chromatic", chi}}, std::to_string(chi) + "\n");
      return 0;
    }
    if (*esec_cmd) {
      ctx.emit_ideal(secant_edge_ideal(load_graph(fileA), r, ctx.lim));
      return 0;
    }
    if (*perfect_cmd) {
      PerfectReport rep = is_perfect(load_graph(fileA), ctx.lim);
      json j{{"perfect", rep.perfect}};
      std::string text = rep.perfect ? "perfect\n" : "imperfect " + verts_line(rep.witness) + "\n";
      if (!rep.perfect) j["witness"] = rep.witness;
      ctx.emit(j, text);
      return 0;
    }
    if (*holes_cmd) {
      auto holes = odd_hole_generators(load_graph(fileA));
      json j{{"odd_holes", holes}};
      std::string text;
      for (const auto& h : holes) text += verts_line(h) + "\n";
      ctx.emit(j, text);
      return 0;
    }
    if (*hchrom_cmd) {
      int chi = hypergraph_chromatic(load_hypergraph(fileA));
      ctx.emit(json{{"chromatic", chi}}, std::to_string(chi) + "\n");
      return 0;
    }
    if (*psec_cmd) {
      ctx.emit_ideal(antichain_secant(load_poset(fileA), r));
      return 0;
    }
    if (*minor_cmd) {
      MinorFamily F;
      if (family == "generic") F.kind = MinorKind::Generic;
      else if (family == "symmetric") F.kind = MinorKind::Symmetric;
      else if (family == "pfaffian") F.kind = MinorKind::SkewPfaffian;
      else throw std::domain_error("unknown family: " + family);
      F.rows = rows;
      F.cols = cols > 0 ? cols : rows;
      int kmax;
      if (F.kind == MinorKind::Generic) kmax = std::min(F.rows, F.cols);
      else if (F.kind == MinorKind::Symmetric) kmax = F.rows;
      else kmax = F.rows / 2;
      int kmin = kflag > 0 ? kflag : 2;
      if (kflag > 0) kmax = kflag;
      json j;
      j["checks"] = json::array();
      std::string text;
      bool all_ok = true;
      for (int k = kmin; k <= kmax; ++k) {
        WitnessReport rep = minor_witness_check(F, k);
        all_ok = all_ok && rep.ok;
        json c{{"k", k}, {"ok", rep.ok}};
        text += "k=" + std::to_string(k) + (rep.ok ? " ok" : " MISMATCH") + "\n";
        if (!rep.ok) {
          VarContext vctx = build_poset(F).elements.empty()
                                ? VarContext(1)
                                : VarContext(build_poset(F).elements);
          for (const auto& m : rep.only_antichains)
            text += "  only-antichains: " + format_monomial(vctx, m) + "\n";
          for (const auto& m : rep.only_minors)
            text += "  only-minors: " + format_monomial(vctx, m) + "\n";
        }
        j["checks"].push_back(c);
      }
      ctx.emit(j, text);
      return all_ok ? 0 : 1;
    }
    if (*csec_cmd) {
      SimplicialComplex D = secant_complex(load_complex(fileA), r);
      ctx.emit(complex_json(D), format_complex(D));
      return 0;
    }
    if (*cyc_cmd) {
      bool ok = cyclic_polytope_crosscheck(nflag, r);
      ctx.emit(json{{"match", ok}}, std::string(ok ? "ok" : "mismatch") + "\n");
      return ok ? 0 : 1;
    }
    if (*tval_cmd || *tpart_cmd || *tne_cmd || *scroll_cmd) {
      PointConfiguration A = *scroll_cmd ? build_config(parse_named_config(named))
                                         : config_from_flags(named, config_file);
      Triangulation T = load_triangulation(fileB, A);
      if (*tval_cmd) {
        ValidationReport rep = validate_triangulation(T);
        json j{{"valid", rep.valid},
               {"proper_checked", rep.proper_checked},
               {"total_volume", rep.total_volume},
               {"hull_volume", rep.hull_vol},
               {"message", rep.message},
               {"full", is_full(T)}};
        std::string text = (rep.valid ? "valid" : "invalid") + std::string(": ") + rep.message +
                           "\nvolume " + std::to_string(rep.total_volume) + " of " +
                           std::to_string(rep.hull_vol) + "\n" +
                           (is_full(T) ? "full\n" : "not full\n");
        ctx.emit(j, text);
        return rep.valid ? 0 : 1;
      }
      if (*tpart_cmd) {
        ValidationReport vrep = validate_triangulation(T);
        if (!vrep.valid) throw std::domain_error("triangulation invalid: " + vrep.message);
        if (!is_full(T)) throw std::domain_error("triangulation is not full");
        PartitionReport rep = r_partitionable(T, r);
        json j{{"count", rep.count},
               {"expected_dim_ok", rep.expected_dim_ok},
               {"degree_lower_bound", rep.degree_lower_bound},
               {"sets", rep.sets}};
        std::string text = "count " + std::to_string(rep.count) + "\n";
        for (const auto& s : rep.sets) text += verts_line(s) + "\n";
        if (true_degree >= 0) {
          bool within = rep.degree_lower_bound <= true_degree;
          j["within_degree"] = within;
          j["equality"] = rep.degree_lower_bound == true_degree;
          text += std::string("bound ") + (within ? "<=" : "EXCEEDS") + " stated degree " +
                  std::to_string(true_degree) +
                  (rep.degree_lower_bound == true_degree ? " (equality)" : "") + "\n";
        }
        ctx.emit(j, text);
        return 0;
      }
      if (*tne_cmd) {
        Graph G = nonedge_graph(T);
        json j;
        j["nonedges"] = json::array();
        std::string text;
        for (auto [i, jv] : G.edges) {
          j["nonedges"].push_back({i - 1, jv - 1});
          text += std::to_string(i - 1) + " " + std::to_string(jv - 1) + "\n";
        }
        ctx.emit(j, text);
        return 0;
      }
      // scroll-check
      NamedConfig nk = parse_named_config(named);
      if (nk.kind != NamedConfig::Kind::Scroll || nk.params.size() != 2)
        throw std::domain_error("scroll-check needs --named scroll:l1,l2");
      ScrollReport rep = scroll_forbidden_check(T, nk.params[0], nk.params[1]);
      json j{{"tree_ok", rep.tree_ok}};
      std::string text = rep.tree_ok ? "tree ok\n" : "tree BROKEN\n";
      j["interior_claws"] = json::array();
      j["boundary_claws"] = json::array();
      for (const auto& c : rep.interior_claws) {
        j["interior_claws"].push_back({{"row", c.row}, {"center", c.center}, {"leaves", c.leaves}});
        text += "interior-claw row=" + std::to_string(c.row) +
                " center=" + std::to_string(c.center) + " leaves=" + verts_line(c.leaves) + "\n";
      }
      for (const auto& c : rep.boundary_claws) {
        j["boundary_claws"].push_back({{"row", c.row}, {"center", c.center}, {"leaves", c.leaves}});
        text += "boundary-claw row=" + std::to_string(c.row) +
                " center=" + std::to_string(c.center) + " leaves=" + verts_line(c.leaves) + "\n";
      }
      if (rep.interior_claws.empty() && rep.boundary_claws.empty()) text += "clean\n";
      ctx.emit(j, text);
      return 0;
    }
    if (*pull_cmd) {
      PointConfiguration A = config_from_flags(named, config_file);
      std::vector<int> order;
      if (order_str.empty())
        for (int i = 0; i < A.size(); ++i) order.push_back(i);
      else
        order = parse_int_list(order_str);
      Triangulation T = lex_triangulation(A, order);
      json j{{"simplices", T.simplices}};
      ctx.emit(j, format_triangulation(T));
      return 0;
    }
    if (*rooks_cmd) {
      auto found = rook_placement(parse_int_list(sizes_str), sflag);
      if (!found) {
        ctx.emit(json{{"found", false}}, "none\n");
        return 0;
      }
      json j{{"found", true}, {"rooks", *found}};
      std::string text;
      for (const auto& cell : *found) text += verts_line(cell) + "\n";
      ctx.emit(j, text);
      return 0;
    }
    err << "no subcommand selected\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace secantkit
