#include "secantkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace secantkit {

namespace {

// strip comments, skip blanks
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

int to_int(const std::string& s) {
  size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
  return v;
}

Rational to_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

void expect_header(const std::vector<std::string>& lines, const std::string& kw) {
  if (lines.empty() || tokens(lines[0])[0] != kw)
    throw std::invalid_argument("expected a '" + kw + "' header line");
}

}  // namespace

MonomialIdeal parse_ideal(std::istream& in) {
  auto lines = content_lines(in);
  expect_header(lines, "vars");
  auto head = tokens(lines[0]);
  std::vector<std::string> names(head.begin() + 1, head.end());
  VarContext ctx(names);
  std::map<std::string, int> index;
  for (int i = 0; i < ctx.n; ++i) index.emplace(ctx.names[i], i);

  std::vector<Monomial> gens;
  bool zero = false;
  for (size_t li = 1; li < lines.size(); ++li) {
    auto toks = tokens(lines[li]);
    if (toks.size() == 1 && toks[0] == "zero") { zero = true; continue; }
    Monomial m = Monomial::one(ctx.n);
    bool unit_line = toks.size() == 1 && toks[0] == "1";
    if (!unit_line) {
      for (const auto& t : toks) {
        auto caret = t.find('^');
        std::string name = t.substr(0, caret);
        int exp = 1;
        if (caret != std::string::npos) exp = to_int(t.substr(caret + 1));
        auto it = index.find(name);
        if (it == index.end()) throw std::invalid_argument("unknown variable: " + name);
        if (exp < 1) throw std::invalid_argument("exponent must be >= 1");
        m.e[it->second] += exp;
      }
    }
    gens.push_back(m);
  }
  if (zero) {
    if (!gens.empty())
      throw std::invalid_argument("'zero' cannot be mixed with generators");
    return zero_ideal(ctx);
  }
  return normalize(ctx, std::move(gens));
}

std::string format_monomial(const VarContext& ctx, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < ctx.n; ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += ctx.names[i];
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out;
}

std::string format_ideal(const MonomialIdeal& I) {
  std::string out = "vars";
  for (const auto& n : I.ctx.names) out += " " + n;
  out += '\n';
  if (I.is_zero()) {
    out += "zero\n";
    return out;
  }
  for (const auto& g : I.min_gens) out += format_monomial(I.ctx, g) + "\n";
  return out;
}

Graph parse_graph(std::istream& in) {
  auto lines = content_lines(in);
  expect_header(lines, "graph");
  auto head = tokens(lines[0]);
  if (head.size() != 2) throw std::invalid_argument("graph header needs a vertex count");
  Graph G(to_int(head[1]));
  for (size_t li = 1; li < lines.size(); ++li) {
    auto toks = tokens(lines[li]);
    if (toks.size() != 2) throw std::invalid_argument("graph edges are 'i j' lines");
    G.add_edge(to_int(toks[0]), to_int(toks[1]));
  }
  return G;
}

std::string format_graph(const Graph& G) {
  std::string out = "graph " + std::to_string(G.n) + "\n";
  for (auto [i, j] : G.edges)
    out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

Hypergraph parse_hypergraph(std::istream& in) {
  auto lines = content_lines(in);
  expect_header(lines, "hypergraph");
  auto head = tokens(lines[0]);
  if (head.size() != 2) throw std::invalid_argument("hypergraph header needs a vertex count");
  int n = to_int(head[1]);
  std::vector<std::vector<int>> edges;
  for (size_t li = 1; li < lines.size(); ++li) {
    std::vector<int> e;
    for (const auto& t : tokens(lines[li])) e.push_back(to_int(t));
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

Poset parse_poset(std::istream& in) {
  auto lines = content_lines(in);
  expect_header(lines, "poset");
  auto head = tokens(lines[0]);
  if (head.size() != 2) throw std::invalid_argument("poset header needs an element count");
  int n = to_int(head[1]);
  std::vector<std::string> elems;
  for (int i = 1; i <= n; ++i) elems.push_back("x" + std::to_string(i));
  std::vector<std::pair<int, int>> covers;
  for (size_t li = 1; li < lines.size(); ++li) {
    auto toks = tokens(lines[li]);
    if (toks.size() != 3 || toks[1] != "<")
      throw std::invalid_argument("poset covers are 'i < j' lines");
    int a = to_int(toks[0]), b = to_int(toks[2]);
    if (a < 1 || b < 1 || a > n || b > n)
      throw std::invalid_argument("cover element out of range");
    covers.emplace_back(a - 1, b - 1);
  }
  return Poset(std::move(elems), std::move(covers));
}

SimplicialComplex parse_complex(std::istream& in) {
  auto lines = content_lines(in);
  expect_header(lines, "complex");
  auto head = tokens(lines[0]);
  if (head.size() != 2) throw std::invalid_argument("complex header needs a vertex count");
  int n = to_int(head[1]);
  std::vector<std::vector<int>> facets;
  for (size_t li = 1; li < lines.size(); ++li) {
    auto toks = tokens(lines[li]);
    if (toks.size() == 1 && toks[0] == "void") {
      if (lines.size() != 2) throw std::invalid_argument("'void' must stand alone");
      return SimplicialComplex::make_void(n);
    }
    if (toks.size() == 1 && toks[0] == "empty") {
      facets.push_back({});
      continue;
    }
    std::vector<int> f;
    for (const auto& t : toks) f.push_back(to_int(t));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::make(n, std::move(facets));
}

std::string format_complex(const SimplicialComplex& D) {
  std::string out = "complex " + std::to_string(D.n) + "\n";
  if (D.void_complex) return out + "void\n";
  for (const auto& f : D.facets) {
    if (f.empty()) { out += "empty\n"; continue; }
    std::string line;
    for (int v : f) line += (line.empty() ? "" : " ") + std::to_string(v);
    out += line + "\n";
  }
  return out;
}

PointConfiguration parse_config(std::istream& in) {
  auto lines = content_lines(in);
  expect_header(lines, "config");
  auto head = tokens(lines[0]);
  if (head.size() != 3) throw std::invalid_argument("config header is 'config n d'");
  int n = to_int(head[1]), d = to_int(head[2]);
  if (static_cast<int>(lines.size()) != n + 2)
    throw std::invalid_argument("config needs n point lines and an omega line");
  std::vector<std::vector<long long>> pts;
  for (int i = 1; i <= n; ++i) {
    auto toks = tokens(lines[i]);
    if (static_cast<int>(toks.size()) != d)
      throw std::invalid_argument("point with wrong coordinate count");
    std::vector<long long> p;
    for (const auto& t : toks) p.push_back(std::stoll(t));
    pts.push_back(std::move(p));
  }
  auto omega_toks = tokens(lines[n + 1]);
  if (omega_toks.empty() || omega_toks[0] != "omega" ||
      static_cast<int>(omega_toks.size()) != d + 1)
    throw std::invalid_argument("config ends with 'omega r1 .. rd'");
  std::vector<Rational> omega;
  for (size_t i = 1; i < omega_toks.size(); ++i) omega.push_back(to_rational(omega_toks[i]));
  return make_config(std::move(pts), std::move(omega));
}

std::string format_config(const PointConfiguration& A) {
  std::string out = "config " + std::to_string(A.size()) + " " + std::to_string(A.dim) + "\n";
  for (const auto& p : A.points) {
    std::string line;
    for (long long v : p) line += (line.empty() ? "" : " ") + std::to_string(v);
    out += line + "\n";
  }
  out += "omega";
  for (const auto& r : A.omega) out += " " + r.str();
  return out + "\n";
}

Triangulation parse_triangulation(std::istream& in, const PointConfiguration& A) {
  auto lines = content_lines(in);
  expect_header(lines, "triangulation");
  Triangulation T;
  T.config = A;
  for (size_t li = 1; li < lines.size(); ++li) {
    std::vector<int> s;
    for (const auto& t : tokens(lines[li])) s.push_back(to_int(t));
    for (int v : s)
      if (v < 0 || v >= A.size())
        throw std::invalid_argument("simplex point index out of range");
    std::sort(s.begin(), s.end());
    T.simplices.push_back(std::move(s));
  }
  std::sort(T.simplices.begin(), T.simplices.end());
  return T;
}

std::string format_triangulation(const Triangulation& T) {
  std::string out = "triangulation\n";
  for (const auto& s : T.simplices) {
    std::string line;
    for (int v : s) line += (line.empty() ? "" : " ") + std::to_string(v);
    out += line + "\n";
  }
  return out;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open file: " + path);
  return f;
}

}  // namespace

MonomialIdeal load_ideal(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_ideal(f);
}
Graph load_graph(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_graph(f);
}
Hypergraph load_hypergraph(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_hypergraph(f);
}
Poset load_poset(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_poset(f);
}
SimplicialComplex load_complex(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_complex(f);
}
PointConfiguration load_config(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_config(f);
}
Triangulation load_triangulation(const std::string& path, const PointConfiguration& A) {
  auto f = open_or_throw(path);
  return parse_triangulation(f, A);
}

}  // namespace secantkit
