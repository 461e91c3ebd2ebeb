#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "leavitt/checks.hpp"
#include "leavitt/error.hpp"
#include "test_util.hpp"

using namespace leavitt;
using test::fam;

TEST_CASE("oracle reachability") {
  const auto r = oracle_reach(fam("line(3)"));
  CHECK(r[0] == 0b111);
  CHECK(r[2] == 0b100);
}

TEST_CASE("oracle lattices match hand counts") {
  CHECK(oracle_hs_sets(fam("line(3)")).size() == 2);
  CHECK(oracle_hs_sets(fam("chain3")).size() == 4);
  CHECK(oracle_hs_sets(parse_graph("vertices: a b c\n")).size() == 8);
  CHECK(oracle_hs_closure(fam("chain3"), 0b010) == 0b011);
}

TEST_CASE("oracle cycle and CSP facts") {
  CHECK(oracle_cycle_count(fam("k3")) == 5);
  CHECK(oracle_cycle_count(fam("mult2")) == 16);
  CHECK(oracle_bounded_csps(fam("chain3"), 1, 3).size() == 2);
  CHECK_FALSE(oracle_isolated_cycles(fam("chain3")));
  CHECK(oracle_isolated_cycles(fam("loop")));
  CHECK(oracle_condition_K(fam("rose(2)")));
  CHECK_FALSE(oracle_condition_K(fam("chain3")));
  CHECK_FALSE(oracle_condition_L(fam("loop")));
  CHECK(oracle_x0(fam("chain3")) == 0b010);
}

TEST_CASE("oracle quotient criterion") {
  CHECK(oracle_pisu(fam("rose(2)"), 0));
  CHECK_FALSE(oracle_pisu(fam("loop"), 0));
  CHECK_FALSE(oracle_pisu(fam("rose(2)"), 0b1));
  CHECK_FALSE(oracle_pisu(fam("chain3"), 0b011));
}

TEST_CASE("oracle entry paths") {
  const Graph g = parse_graph("vertices: a b c\nedge a -> b\nedge b -> c\nedge a -> c\n");
  CHECK(oracle_entry_paths(g, 0b100, 3).size() == 3);
}

TEST_CASE("Bareiss determinant") {
  CHECK(bareiss_determinant(IntMatrix(2, 2, {1, 2, 3, 4})) == -2);
  CHECK(bareiss_determinant(IntMatrix(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
  CHECK(bareiss_determinant(IntMatrix(2, 2, {2, 4, 1, 2})) == 0);
  CHECK(bareiss_determinant(IntMatrix(3, 3, {2, -3, 1, 2, 0, -1, 1, 4, 5})) == 49);
  CHECK_THROWS_AS(bareiss_determinant(IntMatrix(2, 3)), Error);
}

TEST_CASE("random generation is seeded") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 20; ++i) {
    const Graph x = random_graph(a, 6, 10), y = random_graph(b, 6, 10);
    CHECK(x == y);
    CHECK(x.vertex_count() >= 1);
    CHECK(x.vertex_count() <= 6);
    CHECK(x.edge_count() <= 10);
  }
}

TEST_CASE("single-vertex graphs are generated and pass") {
  std::mt19937_64 rng(0);
  std::size_t singles = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(rng, 6, 10);
    if (g.vertex_count() == 1) {
      ++singles;
      CHECK_FALSE(check_graph(g).has_value());
    }
  }
  CHECK(singles > 0);
}

TEST_CASE("check suite accepts the named families") {
  for (const char* spec : {"line(4)", "rose(3)", "loop", "chain3", "enm(2,3)", "tri", "k3", "mult2"}) {
    const auto failure = check_graph(fam(spec));
    CHECK_MESSAGE(!failure, spec << ": " << (failure ? failure->property + " " + failure->detail : ""));
  }
  CHECK_FALSE(check_graph(parse_graph("")).has_value());
}

TEST_CASE("fuzz is reproducible and clean") {
  const FuzzResult a = fuzz({50, 5, 8, 123});
  const FuzzResult b = fuzz({50, 5, 8, 123});
  CHECK(a.tested == 50);
  CHECK_FALSE(a.failure.has_value());
  CHECK(b.tested == a.tested);
  CHECK_THROWS_AS(fuzz({1, 0, 3, 0}), Error);
  CHECK_THROWS_AS(fuzz({1, 20, 3, 0}), Error);
}

TEST_CASE("checks reject oversized graphs") {
  CHECK_THROWS_AS(oracle_reach(fam("line(13)")), Error);
}

TEST_CASE("named checks") {
  CHECK(graph_checks().size() >= 15);
  CHECK(graph_check("x0-quotient-isolated").name == "x0-quotient-isolated");
  CHECK_THROWS_AS(graph_check("nope"), Error);
}
