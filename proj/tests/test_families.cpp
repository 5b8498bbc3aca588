#include "doctest.h"

#include "degenlab/families.hpp"
#include "degenlab/isomorphism.hpp"
#include "degenlab/minors.hpp"
#include "fixtures.hpp"
#include "printers.hpp"

using namespace degenlab;
using fixtures::graph;

TEST_SUITE("families") {
  TEST_CASE("standard families") {
    CHECK(standard_family(FamilySpec::parse("path:4")) == graph(4, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK(standard_family(FamilySpec::parse("complete:5")).size() == 10);
    const Graph k23 = standard_family(FamilySpec::parse("complete-bipartite:2,3"));
    CHECK(k23.size() == 6);
    CHECK(k23.neighbors(0) == 0b11100);
    CHECK(k23.neighbors(1) == 0b11100);
    CHECK(standard_family(FamilySpec::parse("cycle:5")) == cycle_graph(5));
    CHECK(standard_family(FamilySpec::parse("empty:3")).size() == 0);
    CHECK(standard_family(FamilySpec::parse("figure1")) == figure1());
    CHECK(FamilySpec::parse("matula:2").to_string() == "matula:2");
  }

  TEST_CASE("bad family specs") {
    CHECK_THROWS_AS(FamilySpec::parse("wheel:5"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("path"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("path:x"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("complete-bipartite:2"), Error);
    CHECK_THROWS_AS(standard_family(FamilySpec::parse("cycle:2")), Error);
    CHECK_THROWS_AS(matula(0), Error);
    CHECK_THROWS_AS(matula(17), Error);
  }

  TEST_CASE("matula examples") {
    CHECK(matula(1) == fixtures::graph(4, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK(matula(2).order() == 8);
    CHECK(matula(2).size() == 14);
    CHECK(is_isomorphic(matula(2), complement(matula(2))));
  }

  TEST_CASE("matula order and size for every s") {
    for (int s = 1; s <= 16; ++s) {
      const Graph g = matula(s);
      CHECK(g.order() == 4 * s);
      CHECK(g.size() == s * (s - 1) + 3 * s * s);
    }
  }

  TEST_CASE("matula is self-complementary with subgraph connectivity s") {
    for (int s = 1; s <= 3; ++s) {
      const Graph g = matula(s);
      CHECK(is_isomorphic(g, complement(g)));
      CHECK(max_subgraph_connectivity(g) == s);
    }
  }

  TEST_CASE("figure 1 reconstruction") {
    const Graph g = figure1();
    CHECK(g.order() == 8);
    CHECK(g.size() == 13);
    for (const auto& [u, v] : figure1_certain_edges()) CHECK(g.adjacent(u, v));
    // the collinear d-f-h segment read through f
    CHECK(g.adjacent(3, 5));
    CHECK(g.adjacent(5, 7));
    CHECK_FALSE(g.adjacent(3, 7));
  }

  TEST_CASE("figure 1 beats n - 1 on the min-degree ceiling sum") {
    const Graph g = figure1();
    CHECK(ceiling_value(g, CeilingParam::delta) == 4);
    CHECK(ceiling_value(complement(g), CeilingParam::delta) == 4);
  }

  TEST_CASE("the through-f reading is forced") {
    // Reading the segment as a single d-h edge leaves 12 edges, too few for
    // either side to reach a min-degree-4 minor.
    Graph alt = graph(8, {});
    for (const auto& [u, v] : figure1_certain_edges()) alt.add_edge(u, v);
    alt.add_edge(3, 7);
    CHECK(alt.size() == 12);
    CHECK(ceiling_value(alt, CeilingParam::delta) < 4);
  }
}
