#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "leavitt/error.hpp"
#include "leavitt/hereditary.hpp"
#include "test_util.hpp"

using namespace leavitt;
using test::fam;
using test::Ids;
using test::vs;

namespace {

std::vector<Ids> lattice_ids(const Graph& g, std::size_t cap = kDefaultLatticeCap) {
  std::vector<Ids> out;
  for (const auto& h : enumerate_hs(g, cap).elements) out.push_back(test::ids(g, h.set()));
  return out;
}

}  // namespace

TEST_CASE("hereditary and saturated predicates") {
  const Graph g = fam("line(3)");
  CHECK(is_hereditary(g, vs(g, {"v2", "v3"})));
  CHECK_FALSE(is_hereditary(g, vs(g, {"v2"})));
  CHECK(is_saturated(g, vs(g, {})));
  CHECK_FALSE(is_saturated(g, vs(g, {"v3"})));  // v2 only points into it
  // sinks are never saturated in
  const Graph s = parse_graph("vertices: a b\n");
  CHECK(is_saturated(s, vs(s, {"a"})));
}

TEST_CASE("hs_closure") {
  const Graph line = fam("line(3)");
  CHECK(test::ids(line, hs_closure(line, vs(line, {"v3"})).set()) == Ids{"v1", "v2", "v3"});
  const Graph chain = fam("chain3");
  CHECK(test::ids(chain, hs_closure(chain, vs(chain, {"v2"})).set()) == Ids{"v1", "v2"});
  CHECK(hs_closure(chain, vs(chain, {})).empty());
  CHECK(test::ids(chain, hereditary_closure(chain, vs(chain, {"v3"}))) == Ids{"v1", "v2", "v3"});
}

TEST_CASE("enumerate_hs on the named families") {
  CHECK(lattice_ids(fam("line(3)")) == std::vector<Ids>{{}, {"v1", "v2", "v3"}});
  CHECK(lattice_ids(fam("chain3")) == std::vector<Ids>{{}, {"v1"}, {"v1", "v2"}, {"v1", "v2", "v3"}});
  CHECK(lattice_ids(fam("rose(2)")).size() == 2);
  const Graph two_sinks = parse_graph("vertices: a b\n");
  CHECK(lattice_ids(two_sinks).size() == 4);
}

TEST_CASE("enumerate_hs respects the cap") {
  const Graph g = parse_graph("vertices: a b c d\n");  // 16 hereditary saturated sets
  const HSLattice l = enumerate_hs(g, 5);
  CHECK(l.truncated);
  CHECK(l.elements.size() == 5);
  CHECK_FALSE(enumerate_hs(g, 16).truncated);
  CHECK_THROWS_AS(enumerate_hs(g, 0), Error);
}

TEST_CASE("join and meet") {
  const Graph g = parse_graph("vertices: a b c\nedge a -> b\nedge a -> c\n");
  const HSSet b = hs_closure(g, vs(g, {"b"}));
  const HSSet c = hs_closure(g, vs(g, {"c"}));
  CHECK(test::ids(g, hs_join(g, b, c).set()) == Ids{"a", "b", "c"});
  CHECK(hs_meet(g, b, c).empty());
}

TEST_CASE("HSSet::verify") {
  const Graph g = fam("line(3)");
  CHECK_THROWS_AS(HSSet::verify(g, vs(g, {"v3"})), Error);
  CHECK(HSSet::verify(g, vs(g, {})).empty());
}

TEST_CASE("cofinality") {
  CHECK(is_cofinal(fam("rose(2)")));
  CHECK(is_cofinal(fam("line(4)")));
  CHECK_FALSE(is_cofinal(fam("chain3")));
  CHECK(is_cofinal(fam("k3")));
  CHECK_FALSE(is_cofinal(parse_graph("vertices: a b\n")));
  CHECK_THROWS_AS(is_cofinal(parse_graph("")), Error);
}

TEST_CASE("quotient graph") {
  const Graph g = fam("chain3");
  const Graph q = quotient_graph(g, hs_closure(g, vs(g, {"v2"})));
  CHECK(q.vertex_count() == 1);
  CHECK(q.vertex_id(0) == "v3");
  REQUIRE(q.edge_count() == 1);
  CHECK(q.edge(0).id == "l3");
  const Graph same = quotient_graph(g, hs_closure(g, vs(g, {})));
  CHECK(same == g);
}

TEST_CASE("restriction graph") {
  const Graph chain = fam("chain3");
  const Graph r = restriction_graph(chain, vs(chain, {"v1"}));
  CHECK(r.vertex_count() == 1);
  CHECK(r.edge_count() == 1);
  CHECK(r.edge(0).source == r.edge(0).range);
  const Graph line = fam("line(3)");
  const Graph tail = restriction_graph(line, vs(line, {"v2", "v3"}));
  CHECK(tail.vertex_count() == 2);
  CHECK(tail.edge_count() == 1);
  CHECK(restriction_graph(line, VertexSet::full(3)) == line);
  CHECK_THROWS_AS(restriction_graph(line, vs(line, {"v2"})), Error);
}

TEST_CASE("ideal graph: the whole vertex set gives the graph back") {
  const Graph g = fam("line(3)");
  const auto r = ideal_graph(g, hs_closure(g, vs(g, {"v3"})));
  REQUIRE(std::holds_alternative<IdealGraph>(r));
  CHECK(std::get<IdealGraph>(r).graph == g);
  CHECK(std::get<IdealGraph>(r).entry_paths.empty());
}

TEST_CASE("ideal graph: a single entry path") {
  const Graph g = parse_graph("vertices: a b c\nedge f: a -> b\nedge h: a -> c\n");
  const auto r = ideal_graph(g, HSSet::verify(g, vs(g, {"b"})));
  REQUIRE(std::holds_alternative<IdealGraph>(r));
  const IdealGraph& ig = std::get<IdealGraph>(r);
  CHECK(ig.entry_paths.size() == 1);
  CHECK(ig.graph.vertex_count() == 2);
  REQUIRE(ig.graph.edge_count() == 1);
  const Edge& bar = ig.graph.edge(0);
  CHECK(ig.graph.vertex_id(bar.source) == "[f]");
  CHECK(ig.graph.vertex_id(bar.range) == "b");
}

TEST_CASE("ideal graph: preconditions") {
  const Graph ab = parse_graph("vertices: a b\nedge a -> b\n");
  CHECK_THROWS_AS(HSSet::verify(ab, vs(ab, {"b"})), Error);  // saturation pulls a in
  const Graph line = fam("line(3)");
  CHECK_THROWS_AS(HSSet::verify(line, vs(line, {"v3"})), Error);
  CHECK_THROWS_AS(ideal_graph(line, hs_closure(line, vs(line, {}))), Error);
}

TEST_CASE("ideal graph: a cycle feeding X makes F_E(X) infinite") {
  const Graph g = fam("chain3");
  const auto r = ideal_graph(g, HSSet::verify(g, vs(g, {"v1"})));
  REQUIRE(std::holds_alternative<InfiniteWitness>(r));
  const Cycle& c = std::get<InfiniteWitness>(r).cycle;
  CHECK(g.vertex_id(c.base) == "v2");
  CHECK(c.edges.size() == 1);
  CHECK(is_cycle(g, c));
}

TEST_CASE("ideal graph: longer entry paths") {
  const Graph g = parse_graph(
      "vertices: a b c d\nedge p: a -> b\nedge q: b -> c\nedge t: b -> d\nedge r: a -> d\nedge s: c -> c\n");
  const auto r = ideal_graph(g, HSSet::verify(g, vs(g, {"c"})));
  REQUIRE(std::holds_alternative<IdealGraph>(r));
  const IdealGraph& ig = std::get<IdealGraph>(r);
  REQUIRE(ig.entry_paths.size() == 2);
  CHECK(ig.graph.vertex_count() == 3);
  CHECK(ig.graph.edge_count() == 3);
  CHECK(ig.graph.find_vertex("[q]").has_value());
  CHECK(ig.graph.find_vertex("[p.q]").has_value());
  CHECK(ig.graph.find_edge("~[p.q]").has_value());
  CHECK(ig.graph.find_edge("s").has_value());
}
