#include <random>

#include "doctest.h"

#include "degenlab/families.hpp"
#include "degenlab/harness.hpp"
#include "degenlab/io.hpp"
#include "degenlab/minors.hpp"
#include "fixtures.hpp"
#include "printers.hpp"
#include "oracles.hpp"

using namespace degenlab;

namespace {

void check_witness(const Graph& g, CeilingParam p) {
  const CeilingWitness w = ceiling(g, p);
  CHECK(apply_minor_ops(g, w.ops) == w.witness);
  CHECK(evaluate(w.witness, p) == w.value);
}

}  // namespace

TEST_SUITE("minors") {
  TEST_CASE("ceiling examples") {
    for (int n = 1; n <= 7; ++n) {
      const CeilingWitness w = ceiling(Graph::complete(n), CeilingParam::delta);
      CHECK(w.value == n - 1);
      CHECK(w.ops.empty());
      CHECK(w.witness == Graph::complete(n));
    }
    CHECK(ceiling_value(figure1(), CeilingParam::delta) == 4);
    CHECK(ceiling_value(path_graph(7), CeilingParam::kappa) == 1);
    CHECK(ceiling_value(complete_bipartite(1, 6), CeilingParam::kappa) == 1);
    CHECK(ceiling_value(cycle_graph(6), CeilingParam::avg_degree) == 2);
    CHECK(ceiling_value(path_graph(4), CeilingParam::avg_degree) == Rational(3, 2));
  }

  TEST_CASE("ceilings agree with the branch-set oracle") {
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        CAPTURE(to_graph6(g));
        CHECK(ceiling_value(g, CeilingParam::delta) == oracle::ceiling_min_degree(g));
        CHECK(ceiling_value(g, CeilingParam::kappa) == oracle::ceiling_connectivity(g));
        CHECK(ceiling_value(g, CeilingParam::avg_degree) == oracle::ceiling_avg_degree(g));
        CHECK(ceiling_value(g, CeilingParam::clique) == oracle::hadwiger_number(g));
      }
    }
  }

  TEST_CASE("ceilings are labelling invariant") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = fixtures::random_graph(7, 0.45, rng);
      const Graph h = fixtures::shuffled(g, rng);
      for (auto p : {CeilingParam::delta, CeilingParam::kappa, CeilingParam::avg_degree})
        CHECK(ceiling_value(g, p) == ceiling_value(h, p));
    }
  }

  TEST_CASE("witnesses replay") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
      const Graph g = fixtures::random_graph(7, 0.4, rng);
      for (auto p : {CeilingParam::delta, CeilingParam::kappa, CeilingParam::avg_degree,
                     CeilingParam::clique})
        check_witness(g, p);
    }
    check_witness(figure1(), CeilingParam::delta);
    check_witness(complement(figure1()), CeilingParam::delta);
  }

  TEST_CASE("memo can be cleared without changing answers") {
    const Rational before = ceiling_value(figure1(), CeilingParam::kappa);
    clear_ceiling_memo();
    CHECK(ceiling_value(figure1(), CeilingParam::kappa) == before);
  }

  TEST_CASE("caps") {
    CHECK_THROWS_AS(ceiling_value(Graph(11), CeilingParam::delta), Error);
    CHECK_NOTHROW(ceiling_value(Graph(11), CeilingParam::delta, 11));
    CHECK_THROWS_AS(ceiling_value(Graph(17), CeilingParam::delta, 20), Error);
    CHECK_THROWS_AS(max_subgraph_connectivity(Graph(13)), Error);
    CHECK_THROWS_AS(exact_parameters(Graph(13)), Error);
  }

  TEST_CASE("parameter names") {
    CHECK(parse_ceiling_param("d") == CeilingParam::avg_degree);
    CHECK(parse_ceiling_param("avg-degree") == CeilingParam::avg_degree);
    CHECK(parse_ceiling_param("kappa") == CeilingParam::kappa);
    CHECK_FALSE(parse_ceiling_param("chi").has_value());
  }

  TEST_CASE("subgraph connectivity examples") {
    CHECK(max_subgraph_connectivity(matula(1)) == 1);
    CHECK(max_subgraph_connectivity(matula(2)) == 2);
    for (int n = 1; n <= 8; ++n) CHECK(max_subgraph_connectivity(Graph::complete(n)) == n - 1);
  }

  TEST_CASE("subgraph connectivity agrees with subset brute force") {
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : enumerate_graphs(n)) {
        const int best = max_subgraph_connectivity(g);
        REQUIRE(best == oracle::max_subgraph_connectivity(g));
        CHECK(ceiling_value(g, CeilingParam::kappa) >= best);
      }
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = fixtures::random_graph(9, 0.55, rng);
      CHECK(max_subgraph_connectivity(g) == oracle::max_subgraph_connectivity(g));
    }
  }

  TEST_CASE("mader search examples") {
    const auto k7 = mader_subgraph_search(Graph::complete(7), 4);
    REQUIRE(k7.has_value());
    CHECK(k7->graph == Graph::complete(7));
    CHECK(k7->connectivity == 6);
    CHECK_FALSE(mader_subgraph_search(path_graph(4), 2).has_value());
    const auto c5 = mader_subgraph_search(cycle_graph(5), 2);
    REQUIRE(c5.has_value());
    CHECK(c5->graph == cycle_graph(5));
    CHECK_THROWS_AS(mader_subgraph_search(Graph(4), -1), Error);
  }

  TEST_CASE("mader search is exact") {
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : enumerate_graphs(n)) {
        const int best = oracle::max_subgraph_connectivity(g);
        for (int k = 1; k <= n; ++k) {
          const auto found = mader_subgraph_search(g, k);
          CHECK(found.has_value() == (k <= best));
          if (found) {
            CHECK(found->connectivity >= k);
            CHECK(induced_subgraph(g, found->vertices) == found->graph);
            CHECK(vertex_connectivity(found->graph) == found->connectivity);
          }
        }
      }
  }

  TEST_CASE("exact parameter examples") {
    const ExactParams c5 = exact_parameters(cycle_graph(5));
    CHECK(c5.chi == 3);
    CHECK(c5.alpha == 2);
    CHECK(c5.eta == 3);
    const ExactParams k5 = exact_parameters(Graph::complete(5));
    CHECK(k5.chi == 5);
    CHECK(k5.alpha == 1);
    CHECK(k5.eta == 5);
    const ExactParams p4 = exact_parameters(path_graph(4));
    CHECK(p4.chi == 2);
    CHECK(p4.alpha == 2);
    CHECK(p4.eta == 2);
  }

  TEST_CASE("chromatic, independence and clique numbers against brute force") {
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : enumerate_graphs(n)) {
        CHECK(chromatic_number(g) == oracle::chromatic_number(g));
        CHECK(independence_number(g) == oracle::independence_number(g));
        CHECK(clique_number(g) == oracle::clique_number(g));
      }
    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = fixtures::random_graph(9, 0.5, rng);
      CHECK(chromatic_number(g) == oracle::chromatic_number(g));
      CHECK(independence_number(g) == oracle::independence_number(g));
    }
  }

  TEST_CASE("ceiling lattice over all graphs up to order 7") {
    for (int n = 1; n <= 7; ++n)
      for (const Graph& g : enumerate_graphs(n)) {
        const Rational cd = ceiling_value(g, CeilingParam::delta);
        const Rational ck = ceiling_value(g, CeilingParam::kappa);
        const Rational cavg = ceiling_value(g, CeilingParam::avg_degree);
        const ExactParams ex = exact_parameters(g);
        CHECK(min_degree(g) <= cd);
        CHECK(cd >= ck);
        CHECK(ck >= ex.eta - 1);
        CHECK(cavg >= cd);
        CHECK(max_subgraph_connectivity(g) <= ck);
      }
  }
}
