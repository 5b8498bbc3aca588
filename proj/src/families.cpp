#include "degenlab/families.hpp"

#include <charconv>

namespace degenlab {

namespace {

constexpr int kMatulaMaxBlock = 16;

struct KindName {
  FamilySpec::Kind kind;
  std::string_view name;
  std::size_t arity;
};

constexpr KindName kKinds[] = {
    {FamilySpec::Kind::path, "path", 1},
    {FamilySpec::Kind::cycle, "cycle", 1},
    {FamilySpec::Kind::complete, "complete", 1},
    {FamilySpec::Kind::complete_bipartite, "complete-bipartite", 2},
    {FamilySpec::Kind::empty, "empty", 1},
    {FamilySpec::Kind::matula, "matula", 1},
    {FamilySpec::Kind::figure1, "figure1", 0},
};

const KindName& lookup(FamilySpec::Kind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw Error(ErrorKind::domain_error, "unknown family kind");
}

void join(Graph& g, int a0, int a1, int b0, int b1) {
  for (int u = a0; u < a1; ++u)
    for (int v = b0; v < b1; ++v) g.add_edge(u, v);
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  for (const auto& k : kKinds) {
    if (k.name != name) continue;
    FamilySpec spec{k.kind, {}};
    if (colon != std::string_view::npos) {
      std::string_view rest = text.substr(colon + 1);
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view tok = rest.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
          throw Error(ErrorKind::domain_error,
                      "invalid family parameter '" + std::string(tok) + "'");
        }
        spec.params.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    }
    if (spec.params.size() != k.arity) {
      throw Error(ErrorKind::domain_error, "family '" + std::string(name) + "' takes " +
                                               std::to_string(k.arity) + " parameter(s)");
    }
    return spec;
  }
  throw Error(ErrorKind::domain_error, "unknown family '" + std::string(name) + "'");
}

std::string FamilySpec::to_string() const {
  std::string out(lookup(kind).name);
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += i == 0 ? ':' : ',';
    out += std::to_string(params[i]);
  }
  return out;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::domain_error, "cycles need at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  join(g, 0, a, a, a + b);
  return g;
}

Graph matula(int s) {
  if (s < 1) throw Error(ErrorKind::domain_error, "matula block size must be >= 1");
  if (s > kMatulaMaxBlock) {
    throw Error(ErrorKind::size_limit, "matula(s) needs 4s <= 64");
  }
  Graph g(4 * s);
  // Blocks B1..B4 occupy [0,s), [s,2s), [2s,3s), [3s,4s).
  for (int block : {0, 3}) {
    for (int u = block * s; u < (block + 1) * s; ++u)
      for (int v = u + 1; v < (block + 1) * s; ++v) g.add_edge(u, v);
  }
  for (int block = 0; block < 3; ++block)
    join(g, block * s, (block + 1) * s, (block + 1) * s, (block + 2) * s);
  return g;
}

std::vector<Edge> figure1_certain_edges() {
  enum { a, b, c, d, e, f, g, h };
  return {{a, b}, {a, c}, {b, d}, {a, e}, {b, f}, {a, g},
          {b, h}, {c, d}, {e, f}, {g, h}, {c, g}};
}

Graph figure1() {
  enum { a, b, c, d, e, f, g, h };
  std::vector<Edge> edges = figure1_certain_edges();
  edges.push_back({d, f});
  edges.push_back({f, h});
  return Graph::from_edges(8, edges);
}

Graph standard_family(const FamilySpec& spec) {
  const auto& info = lookup(spec.kind);
  if (spec.params.size() != info.arity) {
    throw Error(ErrorKind::domain_error,
                std::string(info.name) + " takes " + std::to_string(info.arity) +
                    " parameter(s)");
  }
  for (int p : spec.params) {
    if (p < 1) throw Error(ErrorKind::domain_error, "family parameters must be >= 1");
  }
  switch (spec.kind) {
    case FamilySpec::Kind::path: return path_graph(spec.params[0]);
    case FamilySpec::Kind::cycle: return cycle_graph(spec.params[0]);
    case FamilySpec::Kind::complete: return Graph::complete(spec.params[0]);
    case FamilySpec::Kind::complete_bipartite:
      return complete_bipartite(spec.params[0], spec.params[1]);
    case FamilySpec::Kind::empty: return Graph(spec.params[0]);
    case FamilySpec::Kind::matula: return matula(spec.params[0]);
    case FamilySpec::Kind::figure1: return figure1();
  }
  throw Error(ErrorKind::domain_error, "unknown family kind");
}

}  // namespace degenlab
