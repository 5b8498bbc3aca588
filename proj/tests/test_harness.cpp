#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"

#include "degenlab/harness.hpp"
#include "degenlab/io.hpp"
#include "degenlab/isomorphism.hpp"
#include "oracles.hpp"

using namespace degenlab;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("degenlab_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("enumeration counts") {
    const int expected[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == expected[n - 1]);
    CHECK_THROWS_AS(enumerate_graphs(8), Error);
    CHECK_THROWS_AS(enumerate_graphs(0), Error);
  }

  TEST_CASE("enumeration has no isomorphic pair") {
    for (int n = 1; n <= 5; ++n) {
      const auto graphs = enumerate_graphs(n);
      for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
          CHECK_FALSE(oracle::isomorphic(graphs[i], graphs[j]));
    }
  }

  TEST_CASE("enumeration order is fixed") {
    const auto a = enumerate_graphs(5);
    const auto b = enumerate_graphs(5);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(to_graph6(a[i - 1]) < to_graph6(a[i]));
  }

  TEST_CASE("corpus ingestion") {
    const Corpus one = ingest_corpus(temp_file("one.g6", "D?{\n"));
    REQUIRE(one.graphs.size() == 1);
    CHECK(one.graphs[0].order() == 5);
    CHECK(ingest_corpus(temp_file("empty.g6", "")).graphs.empty());

    std::string text;
    for (int i = 0; i < 10; ++i) text += i == 6 ? "D?!\n" : "D?{\n";
    const Corpus mixed = ingest_corpus(temp_file("mixed.g6", text));
    CHECK(mixed.graphs.size() == 9);
    REQUIRE(mixed.errors.size() == 1);
    CHECK(mixed.errors[0].line == 7);

    try {
      ingest_corpus("/nonexistent/degenlab.g6");
      FAIL("expected io_error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::io_error);
    }
  }

  TEST_CASE("registry") {
    const CheckRegistry r = CheckRegistry::builtin();
    for (const char* name : {"lgprop", "lickwhite", "mader", "kappa_thm3", "wggc_surrogate",
                             "one_fourth", "lattice", "algorithm1", "ng_realizability",
                             "kappa_vs_delta_scan"})
      CHECK(r.contains(name));
    CHECK(r.find("kappa_vs_delta_scan").report_only);
    try {
      run_check(r, "nope", GraphSource::enumerate(3));
      FAIL("expected unknown_check");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::unknown_check);
    }
  }

  TEST_CASE("sweep examples") {
    const CheckRegistry r = CheckRegistry::builtin();
    const SweepReport lg = run_check(r, "lgprop", GraphSource::enumerate(6));
    CHECK(lg.tested == 1 + 2 + 4 + 11 + 34 + 156);
    CHECK(lg.violations.empty());
    const SweepReport one = run_check(r, "lattice", GraphSource::enumerate(1));
    CHECK(one.tested == 1);
    CHECK(one.violations.empty());
    const SweepReport alg = run_check(r, "algorithm1", GraphSource::enumerate(12));
    CHECK(alg.tested == 78);
    CHECK(alg.violations.empty());
    CHECK_THROWS_AS(run_check(r, "lgprop", GraphSource::enumerate(8)), Error);
  }

  TEST_CASE("custom checks and reproducible violations") {
    CheckRegistry r = CheckRegistry::builtin();
    CheckSpec spec;
    spec.name = "sparse";
    spec.statement = "m <= n";
    spec.per_graph = [](const Graph& g, const OracleCaps&) {
      return g.size() <= g.order() ? Outcome::pass() : Outcome::fail("m=" + std::to_string(g.size()));
    };
    r.add(spec);
    SweepOptions serial;
    serial.jobs = 1;
    SweepOptions parallel;
    parallel.jobs = 4;
    const SweepReport a = run_check(r, "sparse", GraphSource::enumerate(5), serial);
    const SweepReport b = run_check(r, "sparse", GraphSource::enumerate(5), parallel);
    CHECK_FALSE(a.violations.empty());
    CHECK(a.violations == b.violations);
    CHECK(a.tested == b.tested);
    for (const auto& v : a.violations) {
      const Graph g = parse_graph6(v.graph6);
      CHECK(spec.per_graph(g, {}).status == Outcome::Status::fail);
    }
    CHECK_THROWS_AS(r.add(CheckSpec{"empty", "", false, {}, {}}), Error);
  }

  TEST_CASE("corpus sweeps enforce caps") {
    const std::string path = temp_file("caps.g6", to_graph6(Graph::complete(11)) + "\nD?{\n");
    const SweepReport rep =
        run_check(CheckRegistry::builtin(), "one_fourth", GraphSource::corpus(path));
    CHECK(rep.tested == 1);
    CHECK(rep.skipped == 1);
    CHECK(rep.corpus == "corpus:" + path);
  }

  TEST_CASE("json report layout") {
    const SweepReport rep =
        run_check(CheckRegistry::builtin(), "lgprop", GraphSource::enumerate(3));
    const auto j = nlohmann::json::parse(report_json(rep));
    CHECK(j["check"] == "lgprop");
    CHECK(j["corpus"] == "enumerate:n<=3");
    CHECK(j["tested"] == 7);
    CHECK(j["violations"].is_array());
    CHECK(j["elapsed_ms"].is_number());
  }
}
