#include "degenlab/minors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "degenlab/isomorphism.hpp"

namespace degenlab {

OracleCaps OracleCaps::from_env() {
  OracleCaps caps;
  const auto read = [](const char* name, int& slot) {
    if (const char* raw = std::getenv(name)) {
      const int v = std::atoi(raw);
      if (v > 0) slot = v;
    }
  };
  read("DEGENLAB_MINOR_CAP", caps.minor_cap);
  read("DEGENLAB_SUBGRAPH_CAP", caps.subgraph_cap);
  read("DEGENLAB_GIRTH_K_MAX", caps.girth_k_max);
  return caps;
}

const char* to_string(CeilingParam p) noexcept {
  switch (p) {
    case CeilingParam::delta: return "delta";
    case CeilingParam::kappa: return "kappa";
    case CeilingParam::avg_degree: return "d";
    case CeilingParam::clique: return "clique";
  }
  return "?";
}

std::optional<CeilingParam> parse_ceiling_param(std::string_view name) {
  if (name == "delta") return CeilingParam::delta;
  if (name == "kappa") return CeilingParam::kappa;
  if (name == "d" || name == "avg-degree") return CeilingParam::avg_degree;
  if (name == "clique") return CeilingParam::clique;
  return std::nullopt;
}

// ---------------------------------------------------------------- cliques

namespace {

void grow_clique(const Graph& g, int size, VertexSet candidates, int& best) {
  if (!candidates) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + popcount(candidates) <= best) return;
    const int v = std::countr_zero(candidates);
    grow_clique(g, size + 1, candidates & g.neighbors(v), best);
    candidates &= ~bit(v);
  }
}

}  // namespace

int clique_number(const Graph& g) {
  int best = 1;
  grow_clique(g, 0, g.vertices(), best);
  return best;
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

namespace {

// DSATUR-ordered backtracking: can g be coloured with k colours?
bool colour_with(const Graph& g, int k, std::vector<int>& colour, int coloured,
                 int used) {
  const int n = g.order();
  if (coloured == n) return true;
  int pick = -1;
  int pick_sat = -1;
  int pick_deg = -1;
  for (int v = 0; v < n; ++v) {
    if (colour[v] >= 0) continue;
    unsigned mask = 0;
    for (VertexSet row = g.neighbors(v); row; row &= row - 1) {
      const int c = colour[std::countr_zero(row)];
      if (c >= 0) mask |= 1U << c;
    }
    const int sat = std::popcount(mask);
    if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
      pick = v;
      pick_sat = sat;
      pick_deg = g.degree(v);
    }
  }
  if (pick_sat >= k) return false;
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool clash = false;
    for (VertexSet row = g.neighbors(pick); row && !clash; row &= row - 1)
      clash = colour[std::countr_zero(row)] == c;
    if (clash) continue;
    colour[pick] = c;
    if (colour_with(g, k, colour, coloured + 1, std::max(used, c + 1))) return true;
    colour[pick] = -1;
  }
  return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
  for (int k = clique_number(g); k <= g.order(); ++k) {
    std::vector<int> colour(g.order(), -1);
    if (colour_with(g, k, colour, 0, 0)) return k;
  }
  return g.order();
}

// ---------------------------------------------------------------- ceilings

Rational evaluate(const Graph& g, CeilingParam p) {
  switch (p) {
    case CeilingParam::delta: return min_degree(g);
    case CeilingParam::kappa: return vertex_connectivity(g);
    case CeilingParam::avg_degree: return Rational(2 * g.size(), g.order());
    case CeilingParam::clique: return clique_number(g);
  }
  return 0;
}

namespace {

// Largest value `p` can take on any minor of a graph with n vertices and m
// edges: minors never gain vertices or edges.
Rational minor_upper_bound(int n, int m, CeilingParam p) {
  switch (p) {
    case CeilingParam::delta:
    case CeilingParam::kappa: {
      int best = 0;
      for (int t = 1; t <= n; ++t) best = std::max(best, std::min(t - 1, 2 * m / t));
      return best;
    }
    case CeilingParam::avg_degree: {
      Rational best = 0;
      for (int t = 1; t <= n; ++t)
        best = std::max(best, std::min(Rational(t - 1), Rational(2 * m, t)));
      return best;
    }
    case CeilingParam::clique: {
      int t = 1;
      while (t + 1 <= n && (t + 1) * t / 2 <= m) ++t;
      return t;
    }
  }
  return 0;
}

Rational minor_upper_bound(const Graph& g, CeilingParam p) {
  return minor_upper_bound(g.order(), g.size(), p);
}

std::vector<MinorOp> child_ops(const Graph& g) {
  std::vector<MinorOp> ops;
  const auto edges = g.edges();
  ops.reserve(2 * edges.size() + g.order());
  for (const auto& [u, v] : edges) ops.push_back(MinorOp::contract_edge(u, v));
  if (g.order() > 1)
    for (int v = 0; v < g.order(); ++v) ops.push_back(MinorOp::delete_vertex(v));
  for (const auto& [u, v] : edges) ops.push_back(MinorOp::delete_edge(u, v));
  return ops;
}

class CeilingMemo {
 public:
  static CeilingMemo& instance() {
    static CeilingMemo memo;
    return memo;
  }

  std::optional<Rational> find(CeilingParam p, const GraphKey& key, bool canonical) {
    std::shared_lock lock(mutex_);
    const auto& table = tables_[slot(p, canonical)];
    const auto it = table.find(key);
    if (it == table.end()) return std::nullopt;
    return it->second;
  }

  void store(CeilingParam p, const GraphKey& key, bool canonical, Rational value) {
    std::unique_lock lock(mutex_);
    tables_[slot(p, canonical)].try_emplace(key, value);
  }

  void clear() {
    std::unique_lock lock(mutex_);
    for (auto& t : tables_) t.clear();
  }

 private:
  static std::size_t slot(CeilingParam p, bool canonical) {
    return static_cast<std::size_t>(p) * 2 + (canonical ? 1 : 0);
  }

  std::shared_mutex mutex_;
  std::array<std::unordered_map<GraphKey, Rational, GraphKeyHash>, 8> tables_;
};

Rational exact_ceiling(const Graph& g, CeilingParam p) {
  auto& memo = CeilingMemo::instance();
  const GraphKey labelled = graph_key(g);
  if (auto hit = memo.find(p, labelled, false)) return *hit;
  const GraphKey canonical = graph_key(canonical_form(g).graph);
  if (auto hit = memo.find(p, canonical, true)) {
    memo.store(p, labelled, false, *hit);
    return *hit;
  }

  Rational best = evaluate(g, p);
  const Rational bound = minor_upper_bound(g, p);
  if (best < bound) {
    for (const MinorOp& op : child_ops(g)) {
      const Graph child = apply_minor_op(g, op);
      if (minor_upper_bound(child, p) <= best) continue;
      best = std::max(best, exact_ceiling(child, p));
      if (best == bound) break;
    }
  }
  memo.store(p, canonical, true, best);
  memo.store(p, labelled, false, best);
  return best;
}

void check_cap(const Graph& g, int cap, const char* what) {
  const int limit = std::min(cap, kGraphKeyMaxOrder);
  if (g.order() > limit) {
    throw Error(ErrorKind::size_limit, std::string(what) + " limited to order " +
                                           std::to_string(limit) + ", got " +
                                           std::to_string(g.order()));
  }
}

}  // namespace

Rational ceiling_value(const Graph& g, CeilingParam p, int cap) {
  check_cap(g, cap, "minor ceiling");
  return exact_ceiling(g, p);
}

CeilingWitness ceiling(const Graph& g, CeilingParam p, int cap) {
  check_cap(g, cap, "minor ceiling");
  const Rational target = exact_ceiling(g, p);
  std::vector<MinorOp> ops;
  Graph current = g;
  while (evaluate(current, p) != target) {
    bool advanced = false;
    for (const MinorOp& op : child_ops(current)) {
      Graph child = apply_minor_op(current, op);
      if (minor_upper_bound(child, p) < target) continue;
      if (exact_ceiling(child, p) == target) {
        ops.push_back(op);
        current = std::move(child);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      throw Error(ErrorKind::domain_error, "ceiling witness reconstruction failed");
    }
  }
  return {target, std::move(ops), current};
}

void clear_ceiling_memo() { CeilingMemo::instance().clear(); }

// ------------------------------------------------------ subgraph searches

namespace {

VertexSet k_core(const Graph& g, VertexSet s, int k) {
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexSet rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (popcount(g.neighbors(v) & s) < k) {
        s &= ~bit(v);
        changed = true;
      }
    }
  }
  return s;
}

VertexSet lift(VertexSet local, VertexSet within) {
  VertexSet out = 0;
  int i = 0;
  for (VertexSet s = within; s; s &= s - 1, ++i)
    if (local & bit(i)) out |= bit(std::countr_zero(s));
  return out;
}

std::optional<SubgraphWitness> search_within(const Graph& g, VertexSet s, int k) {
  s = k_core(g, s, k);
  if (popcount(s) < k + 1) return std::nullopt;
  const Graph h = induced_subgraph(g, s);
  const auto cut = minimum_vertex_cut(h);
  const int kappa = cut ? popcount(*cut) : h.order() - 1;
  if (kappa >= k) return SubgraphWitness{s, h, kappa};

  // Any k-connected subgraph avoids being split by this small separator, so
  // it lies inside one side plus the separator.
  const VertexSet separator = lift(*cut, s);
  VertexSet rest = s & ~separator;
  while (rest) {
    VertexSet comp = rest & (~rest + 1);
    for (VertexSet frontier = comp; frontier;) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      next &= rest & ~comp;
      comp |= next;
      frontier = next;
    }
    rest &= ~comp;
    if (auto found = search_within(g, comp | separator, k)) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SubgraphWitness> mader_subgraph_search(const Graph& g, int k, int cap) {
  if (g.order() > cap) {
    throw Error(ErrorKind::size_limit,
                "subgraph search limited to order " + std::to_string(cap));
  }
  if (k < 0) throw Error(ErrorKind::domain_error, "k must be nonnegative");
  if (k == 0) {
    return SubgraphWitness{g.vertices(), g, vertex_connectivity(g)};
  }
  return search_within(g, g.vertices(), k);
}

int max_subgraph_connectivity(const Graph& g, int cap) {
  int best = 0;
  while (auto found = mader_subgraph_search(g, best + 1, cap)) best = found->connectivity;
  return best;
}

ExactParams exact_parameters(const Graph& g, const OracleCaps& caps) {
  if (g.order() > caps.subgraph_cap) {
    throw Error(ErrorKind::size_limit, "chi/alpha limited to order " +
                                           std::to_string(caps.subgraph_cap));
  }
  const int eta = static_cast<int>(
      ceiling_value(g, CeilingParam::clique, caps.minor_cap).numerator());
  return {chromatic_number(g), independence_number(g), eta};
}

}  // namespace degenlab
