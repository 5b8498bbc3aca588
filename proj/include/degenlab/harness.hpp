#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "degenlab/caps.hpp"
#include "degenlab/graph.hpp"

namespace degenlab {

inline constexpr int kMaxEnumerationOrder = 7;

/// Every graph of order n up to isomorphism, each once, as canonical forms
/// sorted by graph6. Built by adding a vertex to each graph of order n - 1
/// in every possible way. Throws size_limit for n > 7 (use a corpus).
std::vector<Graph> enumerate_graphs(int n);

struct CorpusError {
  int line;  // 1-based
  std::string message;
};

struct Corpus {
  std::vector<Graph> graphs;
  std::vector<CorpusError> errors;
};

/// One graph6 record per line; blank lines are ignored and malformed lines
/// are recorded without stopping the read. Throws io_error if unreadable.
Corpus ingest_corpus(const std::string& path);

/// Where a sweep draws its graphs from.
struct GraphSource {
  enum class Kind { enumerate, corpus };
  Kind kind = Kind::enumerate;
  int n_max = kMaxEnumerationOrder;  // enumerate: orders 1..n_max
  std::string path;                  // corpus file

  static GraphSource enumerate(int n_max) { return {Kind::enumerate, n_max, {}}; }
  static GraphSource corpus(std::string path) { return {Kind::corpus, 0, std::move(path)}; }
  std::string describe() const;
};

/// Result of evaluating a check on one instance.
struct Outcome {
  enum class Status { pass, fail, skip };
  Status status = Status::pass;
  std::string details;
  std::string graph6;  // instance graph; filled by the engine for per-graph checks

  static Outcome pass() { return {}; }
  static Outcome skip(std::string why = {}) { return {Status::skip, std::move(why), {}}; }
  static Outcome fail(std::string details) { return {Status::fail, std::move(details), {}}; }
};

/// A named inequality. Per-graph checks see each graph of the source;
/// per-order checks build their own instances for each order present in the
/// source (e.g. every (n, h) cell of the generator). Exactly one of the two
/// callables is set.
struct CheckSpec {
  std::string name;
  std::string statement;
  bool report_only = false;  // findings never fail the sweep
  std::function<Outcome(const Graph&, const OracleCaps&)> per_graph;
  std::function<std::vector<Outcome>(int n, const OracleCaps&)> per_order;
};

class CheckRegistry {
 public:
  /// Registry holding the built-in checks.
  static CheckRegistry builtin();

  /// Adds or replaces a check.
  void add(CheckSpec spec);
  const CheckSpec& find(const std::string& name) const;  // throws unknown_check
  bool contains(const std::string& name) const { return checks_.count(name) > 0; }
  std::vector<std::string> names() const;

 private:
  std::map<std::string, CheckSpec> checks_;
};

struct Violation {
  std::string graph6;
  std::string details;

  auto operator<=>(const Violation&) const = default;
};

struct SweepReport {
  std::string check;
  std::string corpus;
  long long tested = 0;
  long long skipped = 0;
  std::vector<Violation> violations;  // sorted
  double elapsed_ms = 0.0;
  bool report_only = false;
  std::vector<CorpusError> corpus_errors;

  bool passed() const { return report_only || violations.empty(); }
};

struct SweepOptions {
  int jobs = 0;  // 0: hardware concurrency
  OracleCaps caps = OracleCaps::from_env();
};

SweepReport run_check(const CheckRegistry& registry, const std::string& name,
                      const GraphSource& source, const SweepOptions& options = {});

/// {check, corpus, tested, skipped, report_only, violations:[{graph6, details}],
/// elapsed_ms}, plus corpus_errors when any.
std::string report_json(const SweepReport& report, int indent = 2);

}  // namespace degenlab
