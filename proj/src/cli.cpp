#include "degenlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "degenlab/bounds.hpp"
#include "degenlab/covering.hpp"
#include "degenlab/degeneracy.hpp"
#include "degenlab/families.hpp"
#include "degenlab/generator.hpp"
#include "degenlab/harness.hpp"
#include "degenlab/io.hpp"
#include "degenlab/minors.hpp"

namespace degenlab::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string input;
  std::string family;

  void attach(CLI::App& cmd) {
    auto* i = cmd.add_option("--input", input, "graph6 or edge-list file, '-' for stdin");
    auto* f = cmd.add_option("--family", family, "named family, e.g. path:4, matula:2, figure1");
    i->excludes(f);
  }

  Graph load(std::istream& in) const {
    if (!family.empty()) return standard_family(FamilySpec::parse(family));
    if (input.empty()) throw UsageError("one of --input or --family is required");
    std::string text;
    if (input == "-") {
      text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      std::ifstream file(input);
      if (!file) throw Error(ErrorKind::io_error, "cannot read " + input);
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return parse_graph(text);
  }
};

Json edges_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return edges;
}

Json graph_json(const Graph& g) {
  return {{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}, {"edges", edges_json(g)}};
}

std::string render(const Graph& g, const std::string& format) {
  if (format == "edges") return to_edge_list(g);
  if (format == "dot") return to_dot(g);
  return to_graph6(g) + "\n";
}

Json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return to_string(r);
}

Json girth_json(const Girth& g) {
  if (g.is_infinite()) return nullptr;
  return g.length();
}

std::string girth_text(const Girth& g) {
  return g.is_infinite() ? "inf" : std::to_string(g.length());
}

std::string op_text(const MinorOp& op) {
  std::string s = std::string(to_string(op.kind)) + " " + std::to_string(op.u + 1);
  if (op.kind != MinorOp::Kind::delete_vertex) s += " " + std::to_string(op.v + 1);
  return s;
}

void print_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << key;
  for (std::size_t i = key.size(); i < 24; ++i) out << ' ';
  out << value << '\n';
}

std::string fixed(double v) {
  if (std::isnan(v)) return "n/a";
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// ------------------------------------------------------------------- verbs

int do_gen(int n, int h, const std::string& format, bool trace, bool json, std::ostream& out) {
  const Generated gen = generate(n, h);
  if (!trace && !json) {
    out << render(gen.graph, format);
    return kExitOk;
  }
  Json j = {{"n", n}, {"h", h}, {"graph", graph_json(gen.graph)}};
  if (trace) {
    Json steps = Json::array();
    for (const GenStep& s : gen.trace.steps) {
      Json chosen = Json::array();
      for (int c : s.chosen) chosen.push_back(c + 1);
      steps.push_back({{"i", s.i}, {"chosen", chosen}, {"L", s.L}, {"t", s.t},
                       {"sigma", s.sigma}, {"p", s.p}, {"q", s.q}, {"psi", s.psi}});
    }
    j["trace"] = steps;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

Json entry_json(const BoundEntry& e) {
  Json j = {{"source", e.source}, {"value", e.value.approx}};
  j["exact"] = e.value.exact ? Json(to_string(*e.value.exact)) : Json(nullptr);
  j["strict"] = e.strict;
  j["conditional"] = e.conditional;
  j["symbolic"] = e.symbolic;
  j["note"] = e.note;
  return j;
}

int do_analyze(const Graph& g, bool json, std::ostream& out) {
  const OracleCaps caps = OracleCaps::from_env();
  const BoundReport report = bound_report(g, caps);
  const DegreeStats stats = degree_stats(g);
  const int l = degeneracy(g).value;
  const int lc = degeneracy(complement(g)).value;
  const int kappa = vertex_connectivity(g);
  const Girth gi = girth(g);

  if (json) {
    Json j;
    j["graph"] = graph_json(g);
    j["degree"] = {{"min", stats.min_degree},
                   {"max", stats.max_degree},
                   {"avg", rational_json(stats.avg_degree)}};
    j["degeneracy"] = l;
    j["degeneracy_complement"] = lc;
    j["connectivity"] = kappa;
    j["girth"] = girth_json(gi);
    j["m_complement"] = report.m_c;
    Json entries = Json::array();
    for (const auto& e : report.nu_lower_entries) entries.push_back(entry_json(e));
    j["nu_lower"] = entries;
    j["best_nu_lower"] = entry_json(report.best_nu_lower);
    j["mr_nu_upper"] = report.mr_nu_upper;
    Json certs = Json::array();
    for (const auto& c : report.certificates) {
      certs.push_back({{"status", to_string(c.kind)},
                       {"clause", c.clause ? Json(std::string(1, c.clause)) : Json(nullptr)},
                       {"detail", c.detail}});
    }
    j["certificates"] = certs;
    j["wggc"] = {{"unconditional", std::isnan(report.wggc_unconditional)
                                       ? Json(nullptr)
                                       : Json(report.wggc_unconditional)},
                 {"conditional_half", report.wggc_conditional.half},
                 {"conditional_sqrt2", report.wggc_conditional.sqrt2}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  print_row(out, "graph6", to_graph6(g));
  print_row(out, "order / size", std::to_string(g.order()) + " / " + std::to_string(g.size()));
  print_row(out, "degree min/max/avg", std::to_string(stats.min_degree) + " / " +
                                           std::to_string(stats.max_degree) + " / " +
                                           to_string(stats.avg_degree));
  print_row(out, "degeneracy G / G^c", std::to_string(l) + " / " + std::to_string(lc));
  print_row(out, "connectivity", std::to_string(kappa));
  print_row(out, "girth", girth_text(gi));
  out << "\nnu lower bounds\n";
  for (const auto& e : report.nu_lower_entries) {
    std::string flags = e.strict ? ">" : ">=";
    if (e.conditional) flags += " (conditional)";
    const std::string value = e.value.exact ? to_string(*e.value.exact) : fixed(e.value.approx);
    print_row(out, "  " + e.source, flags + " " + value + "   " + e.note);
  }
  print_row(out, "best nu lower", report.best_nu_lower.source + " " +
                                      fixed(report.best_nu_lower.value.approx));
  print_row(out, "mr_nu upper", fixed(report.mr_nu_upper));
  for (const auto& c : report.certificates) {
    print_row(out, "certificate", std::string(to_string(c.kind)) + " " + c.detail);
  }
  print_row(out, "wggc bound", fixed(report.wggc_unconditional));
  return kExitOk;
}

int do_ceil(const Graph& g, const std::string& param_name, bool witness, bool json,
            std::ostream& out) {
  const auto param = parse_ceiling_param(param_name);
  if (!param) throw UsageError("unknown --param " + param_name);
  const OracleCaps caps = OracleCaps::from_env();
  const CeilingWitness w = ceiling(g, *param, caps.minor_cap);
  if (json) {
    Json j = {{"param", to_string(*param)}, {"value", rational_json(w.value)}};
    if (witness) {
      Json ops = Json::array();
      for (const auto& op : w.ops) {
        Json o = {{"op", to_string(op.kind)}, {"u", op.u + 1}};
        if (op.kind != MinorOp::Kind::delete_vertex) o["v"] = op.v + 1;
        ops.push_back(o);
      }
      j["ops"] = ops;
      j["witness"] = graph_json(w.witness);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  print_row(out, std::string("ceil-") + to_string(*param), to_string(w.value));
  if (witness) {
    for (const auto& op : w.ops) print_row(out, "  op", op_text(op));
    print_row(out, "witness", to_graph6(w.witness));
  }
  return kExitOk;
}

int do_cover(int n, std::optional<int> r, std::optional<int> h, std::optional<int> k,
             std::ostream& out) {
  Json j = {{"n", n}};
  if (r) {
    const bool covering = is_covering_sum(*r, n);
    const SumRange range = ng_range(n);
    const auto threshold = covering_sum_threshold(n);
    j["r"] = *r;
    j["covering_sum"] = covering;
    j["threshold"] = {{"even_min", threshold.even_min}, {"odd_min", threshold.odd_min}};
    j["ng_range"] = {range.lo, range.hi};
    if (covering) {
      const CoveringPair p = minimal_k_pair_for_sum(n, *r);
      j["minimal_k_pair"] = {p.h, p.k};
    } else {
      j["minimal_k_pair"] = nullptr;
    }
  } else {
    if (!h || !k) throw UsageError("cover needs --r, or both --h and --k");
    const PairClassification c = classify_pair({*h, *k, n});
    j["h"] = *h;
    j["k"] = *k;
    j["covering"] = c.is_covering;
    j["right_minimal"] = c.right_minimal;
    j["left_minimal"] = c.left_minimal;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int do_verify(const std::string& check, std::optional<int> n_max, const std::string& corpus,
              int jobs, const std::string& json_path, std::ostream& out, std::ostream& err) {
  const CheckRegistry registry = CheckRegistry::builtin();
  std::vector<std::string> names;
  if (check == "all") {
    names = registry.names();
  } else {
    registry.find(check);
    names.push_back(check);
  }
  const GraphSource source = corpus.empty()
                                 ? GraphSource::enumerate(n_max.value_or(kMaxEnumerationOrder))
                                 : GraphSource::corpus(corpus);
  SweepOptions options;
  options.jobs = jobs;

  bool ok = true;
  Json reports = Json::array();
  for (const auto& name : names) {
    const SweepReport report = run_check(registry, name, source, options);
    ok = ok && report.passed();
    reports.push_back(Json::parse(report_json(report)));
    if (json_path != "-") {
      out << (report.passed() ? "PASS " : "FAIL ") << name << "  tested=" << report.tested
          << " skipped=" << report.skipped << " violations=" << report.violations.size()
          << (report.report_only ? " (report only)" : "") << "  " << fixed(report.elapsed_ms)
          << " ms\n";
      for (const auto& v : report.violations) out << "  " << v.graph6 << "  " << v.details << '\n';
    }
    for (const auto& e : report.corpus_errors) {
      err << "corpus line " << e.line << ": " << e.message << '\n';
    }
  }
  if (!json_path.empty()) {
    const Json doc = names.size() == 1 ? reports.front() : reports;
    if (json_path == "-") {
      out << doc.dump(2) << '\n';
    } else {
      std::ofstream file(json_path);
      if (!file) throw Error(ErrorKind::io_error, "cannot write " + json_path);
      file << doc.dump(2) << '\n';
    }
  }
  return ok ? kExitOk : kExitViolations;
}

int emit_graph(const Graph& g, const std::string& format, bool json, std::ostream& out) {
  if (json) {
    out << graph_json(g).dump(2) << '\n';
  } else {
    out << render(g, format);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"degeneracy and minor-ceiling laboratory", "degenlab"};
  app.set_help_flag("--help", "print help for this command");
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "help for every verb");

  const std::vector<std::string> formats{"graph6", "edges", "dot"};
  const std::vector<std::string> params{"delta", "kappa", "d", "avg-degree", "clique"};

  // gen
  int gen_n = 0, gen_h = 0;
  std::string gen_format = "graph6";
  bool gen_trace = false, gen_json = false;
  auto* gen = app.add_subcommand("gen", "run the right-minimal pair generator");
  gen->add_option("--n", gen_n, "order")->required();
  gen->add_option("--h", gen_h, "degeneracy")->required();
  auto* gen_fmt = gen->add_option("--format", gen_format)->check(CLI::IsMember(formats));
  auto* gen_tr = gen->add_flag("--trace", gen_trace, "emit the execution trace as JSON");
  auto* gen_js = gen->add_flag("--json", gen_json);
  gen_fmt->excludes(gen_tr)->excludes(gen_js);

  // analyze
  GraphInput analyze_in;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "every nu lower bound for one graph");
  analyze_in.attach(*analyze);
  analyze->add_flag("--json", analyze_json);

  // ceil
  GraphInput ceil_in;
  std::string ceil_param;
  bool ceil_witness = false, ceil_json = false;
  auto* ceil = app.add_subcommand("ceil", "minor-monotone ceiling of a parameter");
  ceil_in.attach(*ceil);
  ceil->add_option("--param", ceil_param)->required()->check(CLI::IsMember(params));
  ceil->add_flag("--witness", ceil_witness, "print the minor operations reaching the value");
  ceil->add_flag("--json", ceil_json);

  // cover
  int cover_n = 0;
  std::optional<int> cover_r, cover_h, cover_k;
  bool cover_json = false;
  auto* cover = app.add_subcommand("cover", "covering pairs and sums (JSON)");
  cover->add_option("--n", cover_n)->required();
  auto* cr = cover->add_option("--r", cover_r, "degeneracy sum");
  auto* ch = cover->add_option("--h", cover_h);
  auto* ck = cover->add_option("--k", cover_k);
  cr->excludes(ch)->excludes(ck);
  ch->needs(ck);
  ck->needs(ch);
  cover->add_flag("--json", cover_json, "accepted for symmetry; output is always JSON");

  // construct
  std::string construct_family, construct_format = "graph6";
  std::optional<int> construct_n, construct_r;
  bool construct_json = false;
  auto* construct = app.add_subcommand("construct", "build a named family or realise a sum");
  auto* cf = construct->add_option("--family", construct_family);
  auto* cn = construct->add_option("--n", construct_n, "order, with --r");
  auto* crr = construct->add_option("--r", construct_r, "degeneracy sum to realise");
  cf->excludes(cn)->excludes(crr);
  cn->needs(crr);
  crr->needs(cn);
  auto* c_fmt = construct->add_option("--format", construct_format)->check(CLI::IsMember(formats));
  c_fmt->excludes(construct->add_flag("--json", construct_json));

  // verify
  std::string verify_check, verify_corpus, verify_json;
  std::optional<int> verify_n_max;
  int verify_jobs = 0;
  auto* verify = app.add_subcommand("verify", "run property checks over a corpus");
  verify->add_option("--check", verify_check, "check name or 'all'")->required();
  auto* vn = verify->add_option("--n-max", verify_n_max, "enumerate orders 1..N (per-graph checks stop at 7)");
  auto* vc = verify->add_option("--corpus", verify_corpus, "graph6 file");
  vn->excludes(vc);
  verify->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::NonNegativeNumber);
  verify->add_option("--json", verify_json, "write the JSON report here ('-' for stdout)");

  // convert
  GraphInput convert_in;
  std::string convert_to;
  bool convert_json = false;
  auto* convert = app.add_subcommand("convert", "re-encode a graph");
  convert_in.attach(*convert);
  auto* ct = convert->add_option("--to", convert_to)->check(CLI::IsMember(formats));
  ct->excludes(convert->add_flag("--json", convert_json));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "degenlab: " << e.what() << " (see 'degenlab <verb> --help')\n";
    return kExitUsage;
  }

  try {
    if (*gen) return do_gen(gen_n, gen_h, gen_format, gen_trace, gen_json, out);
    if (*analyze) return do_analyze(analyze_in.load(in), analyze_json, out);
    if (*ceil) return do_ceil(ceil_in.load(in), ceil_param, ceil_witness, ceil_json, out);
    if (*cover) return do_cover(cover_n, cover_r, cover_h, cover_k, out);
    if (*construct) {
      Graph g = construct_family.empty()
                    ? (construct_n ? realize_sum(*construct_n, *construct_r)
                                   : throw UsageError("one of --family or --n/--r is required"))
                    : standard_family(FamilySpec::parse(construct_family));
      return emit_graph(g, construct_format, construct_json, out);
    }
    if (*verify) {
      return do_verify(verify_check, verify_n_max, verify_corpus, verify_jobs, verify_json, out,
                       err);
    }
    if (*convert) {
      return emit_graph(convert_in.load(in), convert_to.empty() ? "graph6" : convert_to,
                        convert_json, out);
    }
  } catch (const UsageError& e) {
    err << "degenlab: " << e.what() << " (see 'degenlab <verb> --help')\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "degenlab: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace degenlab::cli
