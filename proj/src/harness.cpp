#include "degenlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "degenlab/bounds.hpp"
#include "degenlab/covering.hpp"
#include "degenlab/degeneracy.hpp"
#include "degenlab/generator.hpp"
#include "degenlab/io.hpp"
#include "degenlab/isomorphism.hpp"
#include "degenlab/minors.hpp"

namespace degenlab {

// ------------------------------------------------------------- enumeration

namespace {

std::vector<Graph> extend_by_one(const std::vector<Graph>& smaller, int n) {
  std::map<std::string, Graph> seen;
  for (const Graph& base : smaller) {
    for (VertexSet nbrs = 0; nbrs < (VertexSet{1} << (n - 1)); ++nbrs) {
      Graph g(n);
      for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
      for (VertexSet s = nbrs; s; s &= s - 1) g.add_edge(n - 1, std::countr_zero(s));
      Graph canon = canonical_form(g).graph;
      seen.try_emplace(to_graph6(canon), std::move(canon));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [_, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1) throw Error(ErrorKind::domain_error, "order must be positive");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorKind::size_limit,
                "exhaustive enumeration stops at order 7; supply a graph6 corpus instead");
  }
  static std::mutex mutex;
  static std::vector<std::vector<Graph>> levels{{Graph(1)}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(levels.size()) < n) {
    const int next = static_cast<int>(levels.size()) + 1;
    levels.push_back(extend_by_one(levels.back(), next));
  }
  return levels[n - 1];
}

Corpus ingest_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot read corpus " + path);
  Corpus corpus;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      corpus.graphs.push_back(parse_graph6(line));
    } catch (const Error& e) {
      corpus.errors.push_back({number, e.what()});
    }
  }
  return corpus;
}

std::string GraphSource::describe() const {
  if (kind == Kind::corpus) return "corpus:" + path;
  return "enumerate:n<=" + std::to_string(n_max);
}

// ------------------------------------------------------------ check helpers

namespace {

std::string str(const Rational& r) { return to_string(r); }

Outcome require_order(const Graph& g, int cap) {
  return g.order() > cap ? Outcome::skip("order above cap") : Outcome::pass();
}

Outcome check_lgprop(const Graph& g, const OracleCaps&) {
  const int l = degeneracy(g).value;
  const int lc = degeneracy(complement(g)).value;
  if (l + lc <= g.order() - 1) return Outcome::pass();
  return Outcome::fail("l=" + std::to_string(l) + " l_c=" + std::to_string(lc));
}

Outcome check_lickwhite(const Graph& g, const OracleCaps&) {
  for (const Graph& h : {g, complement(g)}) {
    const int l = degeneracy(h).value;
    if (h.size() > lick_white_bound(h.order(), l)) {
      return Outcome::fail("m=" + std::to_string(h.size()) + " exceeds bound for l=" +
                           std::to_string(l));
    }
  }
  return Outcome::pass();
}

// k = 1 is left out: on edgeless graphs its size condition holds vacuously
// while no 1-connected subgraph exists.
Outcome check_mader(const Graph& g, const OracleCaps& caps) {
  if (auto s = require_order(g, caps.subgraph_cap); s.status != Outcome::Status::pass) return s;
  const long long n = g.order();
  const long long m = g.size();
  for (long long k = 2; k <= 4; ++k) {
    if (n < 2 * k - 1 || m < (2 * k - 3) * (n - k + 1) + 1) continue;
    const auto found = mader_subgraph_search(g, static_cast<int>(k), caps.subgraph_cap);
    if (!found) return Outcome::fail("no " + std::to_string(k) + "-connected subgraph");
    if (vertex_connectivity(found->graph) < k) {
      return Outcome::fail("witness for k=" + std::to_string(k) + " is not k-connected");
    }
  }
  return Outcome::pass();
}

int kappa_ceiling(const Graph& g, const OracleCaps& caps) {
  return static_cast<int>(ceiling_value(g, CeilingParam::kappa, caps.minor_cap).numerator());
}

// ceil-kappa(G) > (n-1)/2 - sqrt(m(G^c)/2), i.e. sqrt(2 m_c) > n - 1 - 2 ceil-kappa.
// K1 is skipped: its connectivity convention makes both sides zero.
Outcome check_kappa_thm3(const Graph& g, const OracleCaps& caps) {
  if (auto s = require_order(g, caps.minor_cap); s.status != Outcome::Status::pass) return s;
  if (g.order() == 1) return Outcome::skip("order 1");
  const long long kc = kappa_ceiling(g, caps);
  const long long a = g.order() - 1 - 2 * kc;
  const long long m_c = complement(g).size();
  if (a < 0 || 2 * m_c > a * a) return Outcome::pass();
  return Outcome::fail("ceil-kappa=" + std::to_string(kc) + " m_c=" + std::to_string(m_c));
}

// (n - ck(G)) + (n - ck(G^c)) < (1 + 1/sqrt 2) n + 1, i.e. n - 1 - s < n / sqrt 2.
Outcome check_wggc(const Graph& g, const OracleCaps& caps) {
  if (auto s = require_order(g, caps.minor_cap); s.status != Outcome::Status::pass) return s;
  const long long n = g.order();
  if (n < 4) return Outcome::skip("order below 4");
  const long long k1 = kappa_ceiling(g, caps);
  const long long k2 = kappa_ceiling(complement(g), caps);
  const long long b = n - 1 - (k1 + k2);
  if (b < 0 || 2 * b * b < n * n) return Outcome::pass();
  return Outcome::fail("ceil-kappa sum=" + std::to_string(k1 + k2));
}

// Edgeless graphs are skipped: both ceilings vanish there.
Outcome check_one_fourth(const Graph& g, const OracleCaps& caps) {
  if (auto s = require_order(g, caps.minor_cap); s.status != Outcome::Status::pass) return s;
  if (g.size() == 0) return Outcome::skip("edgeless");
  const Rational kc = ceiling_value(g, CeilingParam::kappa, caps.minor_cap);
  const Rational dc = ceiling_value(g, CeilingParam::avg_degree, caps.minor_cap);
  if (4 * kc > dc) return Outcome::pass();
  return Outcome::fail("ceil-kappa=" + str(kc) + " ceil-d=" + str(dc));
}

Outcome check_lattice(const Graph& g, const OracleCaps& caps) {
  if (g.order() > std::min(caps.minor_cap, caps.subgraph_cap)) {
    return Outcome::skip("order above cap");
  }
  const int delta = min_degree(g);
  const int l = degeneracy(g).value;
  const Rational cd = ceiling_value(g, CeilingParam::delta, caps.minor_cap);
  const Rational ck = ceiling_value(g, CeilingParam::kappa, caps.minor_cap);
  const ExactParams ex = exact_parameters(g, caps);
  std::string bad;
  if (!(delta <= l)) bad += " delta>l";
  if (!(Rational(l) <= cd)) bad += " l>ceil-delta";
  if (!(cd >= ck)) bad += " ceil-delta<ceil-kappa";
  if (!(ck >= ex.eta - 1)) bad += " ceil-kappa<eta-1";
  if (!(l >= ex.chi - 1)) bad += " l<chi-1";
  if (!(ex.chi * ex.alpha >= g.order())) bad += " chi<n/alpha";
  if (bad.empty()) return Outcome::pass();
  return Outcome::fail(bad.substr(1));
}

Outcome check_kappa_vs_delta(const Graph& g, const OracleCaps& caps) {
  if (auto s = require_order(g, caps.minor_cap); s.status != Outcome::Status::pass) return s;
  const int kc = kappa_ceiling(g, caps);
  const int delta = min_degree(g);
  if (kc >= delta) return Outcome::pass();
  return Outcome::fail("ceil-kappa=" + std::to_string(kc) + " < delta=" + std::to_string(delta));
}

std::string cell(int n, int x, const char* name) {
  return "n=" + std::to_string(n) + " " + name + "=" + std::to_string(x);
}

std::vector<Outcome> check_algorithm1(int n, const OracleCaps&) {
  std::vector<Outcome> out;
  for (int h = 0; h < n; ++h) {
    const Generated gen = generate(n, h);
    const Graph& g = gen.graph;
    const Graph gc = complement(g);
    const int l = degeneracy(g).value;
    const int lc = degeneracy(gc).value;
    std::string bad;
    if (g.size() != static_cast<long long>(h) * n - h * (h + 1) / 2) bad += " size";
    if (l != h) bad += " l=" + std::to_string(l);
    const auto cls = classify_pair({h, lc, n});
    if (!cls.is_covering) bad += " not-covering";
    if (!cls.right_minimal) bad += " not-right-minimal";
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    if (building_sequence_degree(g, order) != l) bad += " sigma-degree";
    std::reverse(order.begin(), order.end());
    if (building_sequence_degree(gc, order) != lc) bad += " tau-degree";
    if (const auto v = check_trace(gen.trace, n, h)) {
      bad += " trace:" + v->clause + "@" + std::to_string(v->iteration);
    }
    Outcome o = bad.empty() ? Outcome::pass() : Outcome::fail(cell(n, h, "h") + ":" + bad);
    o.graph6 = to_graph6(g);
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<Outcome> check_ng_realizability(int n, const OracleCaps&) {
  std::vector<Outcome> out;
  const SumRange range = ng_range(n);
  for (int r = range.lo; r <= range.hi; ++r) {
    const Graph g = realize_sum(n, r);
    const int sum = degeneracy(g).value + degeneracy(complement(g)).value;
    Outcome o = sum == r ? Outcome::pass()
                         : Outcome::fail(cell(n, r, "r") + ": got " + std::to_string(sum));
    o.graph6 = to_graph6(g);
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- registry

CheckRegistry CheckRegistry::builtin() {
  CheckRegistry r;
  const auto graph_check = [&r](std::string name, std::string statement, auto fn,
                                bool report_only = false) {
    CheckSpec spec;
    spec.name = std::move(name);
    spec.statement = std::move(statement);
    spec.report_only = report_only;
    spec.per_graph = fn;
    r.add(std::move(spec));
  };
  const auto order_check = [&r](std::string name, std::string statement, auto fn) {
    CheckSpec spec;
    spec.name = std::move(name);
    spec.statement = std::move(statement);
    spec.per_order = fn;
    r.add(std::move(spec));
  };
  graph_check("lgprop", "l(G) + l(G^c) <= n - 1", check_lgprop);
  graph_check("lickwhite", "m <= l n - l(l+1)/2 for G and G^c", check_lickwhite);
  graph_check("mader", "size condition for k = 2..4 yields a k-connected subgraph",
              check_mader);
  graph_check("kappa_thm3", "ceil-kappa(G) > (n-1)/2 - sqrt(m(G^c)/2)", check_kappa_thm3);
  graph_check("wggc_surrogate",
              "(n - ceil-kappa(G)) + (n - ceil-kappa(G^c)) < (1 + 1/sqrt 2) n + 1", check_wggc);
  graph_check("one_fourth", "ceil-kappa(G) > ceil-d(G)/4", check_one_fourth);
  graph_check("lattice",
              "delta <= l <= ceil-delta, ceil-kappa <= ceil-delta, eta - 1 <= ceil-kappa, "
              "chi - 1 <= l, n/alpha <= chi",
              check_lattice);
  order_check("algorithm1", "generator output matches every guarantee for all h < n",
              check_algorithm1);
  order_check("ng_realizability", "every r in ng_range(n) is realised as l(G) + l(G^c)",
              check_ng_realizability);
  graph_check("kappa_vs_delta_scan", "lists graphs with ceil-kappa(G) < delta(G)",
              check_kappa_vs_delta, true);
  return r;
}

void CheckRegistry::add(CheckSpec spec) {
  if (static_cast<bool>(spec.per_graph) == static_cast<bool>(spec.per_order)) {
    throw Error(ErrorKind::invalid_operand, "check needs exactly one of per_graph, per_order");
  }
  std::string name = spec.name;
  checks_.insert_or_assign(std::move(name), std::move(spec));
}

const CheckSpec& CheckRegistry::find(const std::string& name) const {
  const auto it = checks_.find(name);
  if (it == checks_.end()) throw Error(ErrorKind::unknown_check, "unknown check: " + name);
  return it->second;
}

std::vector<std::string> CheckRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : checks_) out.push_back(name);
  return out;
}

// ------------------------------------------------------------------- sweep

namespace {

struct Tally {
  long long tested = 0;
  long long skipped = 0;
  std::vector<Violation> violations;

  void record(Outcome&& o) {
    switch (o.status) {
      case Outcome::Status::pass: ++tested; break;
      case Outcome::Status::skip: ++skipped; break;
      case Outcome::Status::fail:
        ++tested;
        violations.push_back({std::move(o.graph6), std::move(o.details)});
        break;
    }
  }
};

// Runs `task(i, tally)` for i in [0, count) across `jobs` threads and merges
// the per-thread tallies.
template <class Task>
Tally parallel_tally(std::size_t count, int jobs, Task task) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::vector<Tally> tallies(workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&](int w) {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) task(i, tallies[w]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  Tally total;
  for (auto& t : tallies) {
    total.tested += t.tested;
    total.skipped += t.skipped;
    std::move(t.violations.begin(), t.violations.end(), std::back_inserter(total.violations));
  }
  std::sort(total.violations.begin(), total.violations.end());
  return total;
}

}  // namespace

SweepReport run_check(const CheckRegistry& registry, const std::string& name,
                      const GraphSource& source, const SweepOptions& options) {
  const CheckSpec& spec = registry.find(name);
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.check = spec.name;
  report.corpus = source.describe();
  report.report_only = spec.report_only;

  std::vector<Graph> graphs;
  if (source.kind == GraphSource::Kind::corpus) {
    Corpus corpus = ingest_corpus(source.path);
    graphs = std::move(corpus.graphs);
    report.corpus_errors = std::move(corpus.errors);
  } else if (spec.per_graph) {
    if (source.n_max > kMaxEnumerationOrder) {
      throw Error(ErrorKind::size_limit,
                  "exhaustive enumeration stops at order 7; supply a graph6 corpus instead");
    }
    for (int n = 1; n <= source.n_max; ++n) {
      auto level = enumerate_graphs(n);
      std::move(level.begin(), level.end(), std::back_inserter(graphs));
    }
  }

  const int jobs = options.jobs > 0
                       ? options.jobs
                       : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  Tally tally;
  if (spec.per_graph) {
    tally = parallel_tally(graphs.size(), jobs, [&](std::size_t i, Tally& t) {
      Outcome o = spec.per_graph(graphs[i], options.caps);
      o.graph6 = to_graph6(graphs[i]);
      t.record(std::move(o));
    });
  } else {
    std::vector<int> orders;
    if (source.kind == GraphSource::Kind::corpus) {
      std::set<int> present;
      for (const Graph& g : graphs) present.insert(g.order());
      orders.assign(present.begin(), present.end());
    } else {
      for (int n = 1; n <= source.n_max; ++n) orders.push_back(n);
    }
    tally = parallel_tally(orders.size(), jobs, [&](std::size_t i, Tally& t) {
      for (Outcome& o : spec.per_order(orders[i], options.caps)) t.record(std::move(o));
    });
  }
  report.tested = tally.tested;
  report.skipped = tally.skipped;
  report.violations = std::move(tally.violations);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::string report_json(const SweepReport& report, int indent) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["corpus"] = report.corpus;
  j["tested"] = report.tested;
  j["skipped"] = report.skipped;
  j["report_only"] = report.report_only;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    j["violations"].push_back({{"graph6", v.graph6}, {"details", v.details}});
  }
  j["elapsed_ms"] = report.elapsed_ms;
  if (!report.corpus_errors.empty()) {
    auto& errs = j["corpus_errors"] = nlohmann::ordered_json::array();
    for (const auto& e : report.corpus_errors) {
      errs.push_back({{"line", e.line}, {"message", e.message}});
    }
  }
  return j.dump(indent);
}

}  // namespace degenlab
