#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "leavitt/cycles.hpp"
#include "leavitt/error.hpp"
#include "leavitt/hereditary.hpp"
#include "test_util.hpp"

using namespace leavitt;
using test::fam;
using test::Ids;
using test::vs;

TEST_CASE("simple_cycles counts") {
  CHECK(simple_cycles(fam("rose(3)")).size() == 3);
  CHECK(simple_cycles(fam("line(5)")).empty());
  CHECK(simple_cycles(fam("k3")).size() == 5);
  CHECK(simple_cycles(fam("mult2")).size() == 5 + 3 + 2 * 4);
}

TEST_CASE("simple_cycles are canonical and sorted") {
  const Graph g = fam("k3");
  const auto cycles = simple_cycles(g);
  std::size_t at_v1 = 0;
  for (const auto& c : cycles) {
    CHECK(is_cycle(g, c));
    at_v1 += g.vertex_id(c.base) == "v1";
  }
  CHECK(at_v1 == 4);  // only v2 <-> v3 avoids v1
  CHECK(g.vertex_id(cycles.back().base) == "v2");
  const Graph tri = fam("tri");
  const auto t = simple_cycles(tri);
  CHECK(t.size() == 4);
  CHECK(test::edge_ids(tri, t.front().edges) == Ids{"a12", "a21"});
  CHECK(test::edge_ids(tri, t[1].edges) == Ids{"l1"});
}

TEST_CASE("simple_cycles cap") { CHECK_THROWS_AS(simple_cycles(fam("rose(5)"), 3), Error); }

TEST_CASE("find_cycle") {
  CHECK_FALSE(find_cycle(fam("line(3)")).has_value());
  const Graph g = fam("chain3");
  const auto c = find_cycle(g);
  REQUIRE(c.has_value());
  CHECK(is_cycle(g, *c));
  CHECK(g.vertex_id(c->base) == "v1");
}

TEST_CASE("closed simple path predicates") {
  const Graph g = parse_graph("vertices: a b\nedge x: a -> b\nedge y: b -> b\nedge z: b -> a\n");
  const ClosedSimplePath p{0, {0, 1, 2}};  // a -x-> b -y-> b -z-> a
  CHECK(is_closed_simple_path(g, p));
  CHECK_FALSE(is_cycle(g, p));
  CHECK(is_cycle(g, {0, {0, 2}}));
  CHECK_FALSE(is_closed_simple_path(g, {0, {0}}));
  CHECK_FALSE(is_closed_simple_path(g, {0, {}}));
}

TEST_CASE("csp_based_at") {
  CHECK(csp_based_at(fam("loop"), 0).paths.size() == 1);
  CHECK(csp_based_at(fam("rose(4)"), 0).paths.size() == 4);
  const Graph chain = fam("chain3");
  CHECK(csp_based_at(chain, chain.vertex("v2")).paths.size() == 2);
  CHECK(csp_based_at(fam("line(3)"), 1).paths.empty());
  CHECK_THROWS_AS(csp_based_at(chain, 7), std::exception);
}

TEST_CASE("csp_based_at: paths may wind around a cycle avoiding the base") {
  const Graph g = parse_graph("vertices: a b\nedge x: a -> b\nedge y: b -> b\nedge z: b -> a\n");
  const CspSet s = csp_based_at(g, g.vertex("a"));
  CHECK_FALSE(s.finite());
  REQUIRE(s.infinite_witness.has_value());
  CHECK(test::edge_ids(g, s.infinite_witness->edges) == Ids{"y"});
  CHECK(csp_count_at(g, g.vertex("a"), 5) == 5);
  CHECK(csp_count_at(g, g.vertex("b"), 5) == 2);  // y, and z x
}

TEST_CASE("has_exit") {
  const Graph loop = fam("loop");
  CHECK_FALSE(has_exit(loop, {0, {0}}));
  const Graph rose = fam("rose(2)");
  CHECK(has_exit(rose, {0, {0}}));
  CHECK(has_exit(rose, {0, {1}}));
  const Graph chain = fam("chain3");
  const EdgeIndex l3 = *chain.find_edge("l3");
  CHECK(has_exit(chain, {chain.vertex("v3"), {l3}}));
  CHECK_THROWS_AS(has_exit(chain, {chain.vertex("v1"), {l3}}), Error);
}

TEST_CASE("condition (L)") {
  CHECK(condition_L(fam("line(4)")));
  CHECK_FALSE(condition_L(fam("loop")));
  CHECK(condition_L(fam("rose(2)")));
  CHECK_FALSE(condition_L(fam("chain3")));  // the loop at v1 has no exit
  CHECK(condition_L(fam("k3")));
  CHECK_FALSE(condition_L(parse_graph("vertices: a b\nedge a -> b\nedge b -> a\n")));
}

TEST_CASE("condition (K)") {
  CHECK(condition_K(fam("rose(2)")));
  CHECK_FALSE(condition_K(fam("loop")));
  CHECK(condition_K(fam("line(3)")));
  CHECK(condition_K(fam("k3")));
  CHECK(condition_K(fam("tri")));
  CHECK_FALSE(condition_K(fam("chain3")));
  // L without K: a cycle with an exit into a sink
  const Graph g = parse_graph("vertices: a b\nedge a -> a\nedge a -> b\n");
  CHECK(condition_L(g));
  CHECK_FALSE(condition_K(g));
}

TEST_CASE("isolated cycles") {
  CHECK_FALSE(has_isolated_cycles(fam("chain3")));
  CHECK(has_isolated_cycles(fam("loop")));
  CHECK(has_isolated_cycles(parse_graph("vertices: a b\nedge a -> a\nedge b -> b\n")));
  CHECK_FALSE(has_isolated_cycles(fam("rose(2)")));
  CHECK(has_isolated_cycles(fam("line(3)")));
  CHECK(has_isolated_cycles(parse_graph("vertices: a b c\nedge a -> b\nedge b -> a\nedge b -> c\n")));
}

TEST_CASE("X0") {
  const Graph rose = fam("rose(2)");
  CHECK(test::ids(rose, x0_set(rose)) == Ids{"v1"});
  CHECK(x0_set(fam("loop")).empty());
  const Graph chain = fam("chain3");
  CHECK(test::ids(chain, x0_set(chain)) == Ids{"v2"});
  const Graph k3 = fam("k3");
  CHECK(x0_set(k3).size() == 3);
}

TEST_CASE("quotient by the closure of X0 has isolated cycles") {
  for (const char* spec : {"chain3", "tri", "k3", "mult2", "enm(2,3)", "rose(3)", "loop"}) {
    const Graph g = fam(spec);
    CHECK(has_isolated_cycles(quotient_graph(g, hs_closure(g, x0_set(g)))));
  }
}
