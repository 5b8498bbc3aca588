#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "degenlab/covering.hpp"
#include "degenlab/degeneracy.hpp"
#include "degenlab/generator.hpp"
#include "fixtures.hpp"
#include "printers.hpp"

using namespace degenlab;
using fixtures::graph;

TEST_SUITE("generator") {
  TEST_CASE("reproduces the 14-vertex drawing exactly") {
    const Generated gen = generate(14, 4);
    CHECK(gen.graph == fixtures::figure2_left());
    CHECK(gen.graph.size() == 46);
    CHECK(degeneracy(gen.graph).value == 4);
    CHECK(degeneracy(complement(gen.graph)).value == 4);
  }

  TEST_CASE("final trace state for (14, 4)") {
    const GenTrace trace = generate(14, 4).trace;
    REQUIRE(trace.steps.size() == 13);
    const GenStep& last = trace.steps.back();
    CHECK(last.i == 14);
    CHECK(last.L == std::vector<int>{3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3, 2, 1, 0});
    CHECK(last.t == 4);
    CHECK(last.sigma == 45);
    CHECK(last.p == 2);
    CHECK(last.q == 9);
    CHECK(last.chosen == std::vector<int>{0, 6, 7, 8});
    CHECK_FALSE(check_trace(trace, 14, 4).has_value());
  }

  TEST_CASE("h = n - 1 gives the complete graph") {
    for (int n = 1; n <= 10; ++n) {
      const Generated gen = generate(n, n - 1);
      CHECK(gen.graph == Graph::complete(n));
      for (const GenStep& s : gen.trace.steps)
        CHECK(std::all_of(s.L.begin(), s.L.end(), [](int x) { return x == 0; }));
      CHECK_FALSE(check_trace(gen.trace, n, n - 1).has_value());
    }
  }

  TEST_CASE("small hand-executed case (4, 1)") {
    const Generated gen = generate(4, 1);
    CHECK(gen.graph == graph(4, {{1, 2}, {1, 3}, {2, 4}}));
    CHECK(degeneracy(gen.graph).value == 1);
    CHECK(degeneracy(complement(gen.graph)).value == 1);
    CHECK(complement(gen.graph) == graph(4, {{1, 4}, {2, 3}, {3, 4}}));
    const GenStep& last = gen.trace.steps.back();
    CHECK(last.L == std::vector<int>{1, 1, 1, 0});
    CHECK(last.t == 1);
    CHECK(last.q == 3);
  }

  TEST_CASE("h = 0 gives the empty graph") {
    const Generated gen = generate(6, 0);
    CHECK(gen.graph.size() == 0);
    CHECK_FALSE(check_trace(gen.trace, 6, 0).has_value());
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(generate(5, 5), Error);
    CHECK_THROWS_AS(generate(5, -1), Error);
    CHECK_THROWS_AS(generate(0, 0), Error);
  }

  TEST_CASE("every guarantee holds for all n <= 12") {
    for (int n = 1; n <= 12; ++n) {
      for (int h = 0; h < n; ++h) {
        CAPTURE(n);
        CAPTURE(h);
        const Generated gen = generate(n, h);
        const Graph gc = complement(gen.graph);
        const int lc = degeneracy(gc).value;
        CHECK(gen.graph.size() == h * n - h * (h + 1) / 2);
        CHECK(degeneracy(gen.graph).value == h);
        const PairClassification c = classify_pair({h, lc, n});
        CHECK(c.is_covering);
        CHECK(c.right_minimal);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        CHECK(building_sequence_degree(gen.graph, order) == h);
        std::reverse(order.begin(), order.end());
        CHECK(building_sequence_degree(gc, order) == lc);
        CHECK_FALSE(check_trace(gen.trace, n, h).has_value());
        if (!gen.trace.steps.empty()) CHECK(gen.trace.steps.back().t == lc);
        CHECK(generate(n, h).graph == gen.graph);
      }
    }
  }

  TEST_CASE("check_trace catches tampering") {
    GenTrace trace = generate(14, 4).trace;
    trace.steps[8].L[3] += 1;
    const auto v = check_trace(trace, 14, 4);
    REQUIRE(v.has_value());
    CHECK(v->iteration == 10);

    GenTrace t2 = generate(14, 4).trace;
    t2.steps.back().sigma = 44;
    CHECK(check_trace(t2, 14, 4).has_value());

    GenTrace t3 = generate(14, 4).trace;
    t3.steps[5].chosen.pop_back();
    CHECK(check_trace(t3, 14, 4).has_value());
  }

  TEST_CASE("realize_sum") {
    const Graph g = realize_sum(14, 8);
    CHECK(degeneracy(g).value + degeneracy(complement(g)).value == 8);
    for (int n = 1; n <= 10; ++n) CHECK(realize_sum(n, n - 1) == Graph::complete(n));
    const Graph h = realize_sum(9, 5);
    CHECK(degeneracy(h).value + degeneracy(complement(h)).value == 5);
    for (int n = 1; n <= 12; ++n)
      for (int r = ng_range(n).lo; r <= ng_range(n).hi; ++r) {
        const Graph x = realize_sum(n, r);
        CHECK(degeneracy(x).value + degeneracy(complement(x)).value == r);
      }
    try {
      realize_sum(9, 4);
      FAIL("expected not_a_covering_sum");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_a_covering_sum);
    }
  }
}
