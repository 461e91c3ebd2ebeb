#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "leavitt/error.hpp"
#include "leavitt/graph.hpp"
#include "test_util.hpp"

using namespace leavitt;
using test::Ids;

TEST_CASE("dsl: vertices, edges, comments and declaration order") {
  const Graph g = parse_graph(R"(# a small graph
vertices: b a
edge x: b -> a   # trailing comment
edge a -> a
vertices: c
edge y: c -> b * 2
)");
  CHECK(g.vertex_count() == 3);
  CHECK(Ids(g.vertex_ids().begin(), g.vertex_ids().end()) == Ids{"b", "a", "c"});
  REQUIRE(g.edge_count() == 4);
  CHECK(g.edge(0).id == "x");
  CHECK(g.edge(1).id == "e1");
  CHECK(g.edge(2).id == "y_1");
  CHECK(g.edge(3).id == "y_2");
  CHECK(g.out_degree(g.vertex("c")) == 2);
  CHECK(g.in_edges(g.vertex("a")).size() == 2);
}

TEST_CASE("dsl: auto ids skip ids used explicitly") {
  const Graph g = parse_graph("vertices: a\nedge a -> a\nedge e1: a -> a\n");
  CHECK(g.edge(0).id == "e2");
  CHECK(g.edge(1).id == "e1");
}

TEST_CASE("dsl: multiplicity one keeps the plain id") {
  const Graph g = parse_graph("vertices: a\nedge l: a -> a * 1\n");
  CHECK(g.edge(0).id == "l");
}

TEST_CASE("dsl: errors carry positions") {
  SUBCASE("missing arrow") {
    try {
      parse_graph("vertices: a b\nedge a b\n");
      FAIL("no error");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() > 1);
    }
  }
  SUBCASE("unknown vertex") {
    try {
      parse_graph("vertices: a\nedge a -> q\n");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownVertex);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("duplicate vertex") {
    try {
      parse_graph("vertices: a a\n");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateId);
    }
  }
  SUBCASE("duplicate edge id") {
    CHECK_THROWS_AS(parse_graph("vertices: a\nedge x: a -> a\nedge x: a -> a\n"), Error);
  }
  SUBCASE("bad multiplicity") {
    CHECK_THROWS_AS(parse_graph("vertices: a\nedge a -> a * 0\n"), Error);
    CHECK_THROWS_AS(parse_graph("vertices: a\nedge a -> a * x\n"), Error);
  }
  SUBCASE("unknown statement") { CHECK_THROWS_AS(parse_graph("node a\n"), SyntaxError); }
}

TEST_CASE("json input") {
  const Graph g = parse_graph(R"({"schema":1,"vertices":["u","w"],
    "edges":[{"id":"p","src":"u","dst":"w"},{"src":"w","dst":"w","mult":2}]})");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.find_edge("p").has_value());
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["u"],"edges":[{"src":"u","dst":"x"}]})"), Error);
  CHECK_THROWS_AS(parse_graph(R"({"schema":2,"vertices":[],"edges":[]})"), Error);
  try {
    parse_graph("{\n  \"vertices\": [\n  oops ]}");
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("serialization round trips") {
  for (const char* spec : {"line(4)", "rose(3)", "chain3", "tri", "k3", "mult2", "enm(2,3)"}) {
    const Graph g = test::fam(spec);
    CHECK(parse_graph(to_dsl(g)) == g);
    CHECK(parse_graph(to_json_text(g)) == g);
  }
  const Graph empty = parse_graph("");
  CHECK(empty.empty());
  CHECK(parse_graph(to_dsl(empty)) == empty);
}

TEST_CASE("ids are validated") {
  CHECK(is_valid_id("v1"));
  CHECK(is_valid_id("[e1.e2]"));
  CHECK_FALSE(is_valid_id(""));
  CHECK_FALSE(is_valid_id("a b"));
  CHECK_FALSE(is_valid_id("a,b"));
  CHECK_FALSE(is_valid_id("a->b"));
  CHECK_FALSE(is_valid_id("x:"));
  CHECK_THROWS_AS(Graph::build({"a b"}, {}), Error);
  CHECK_THROWS_AS(Graph::build({"a"}, {{"e", "a", "b"}}), Error);
}

TEST_CASE("vertex lists") {
  const Graph g = test::fam("line(3)");
  CHECK(test::ids(g, parse_vertex_list(g, "v3,v1")) == Ids{"v1", "v3"});
  CHECK(parse_vertex_list(g, "").empty());
  CHECK(parse_vertex_list(g, " v2 , v3 ").size() == 2);
  CHECK_THROWS_AS(parse_vertex_list(g, "v9"), Error);
}

TEST_CASE("reachability, sinks and acyclicity") {
  const Graph line = test::fam("line(4)");
  CHECK(reaches(line, "v1", "v4"));
  CHECK_FALSE(reaches(line, "v4", "v1"));
  CHECK(reaches(line, "v2", "v2"));
  CHECK(test::ids(line, sinks(line)) == Ids{"v4"});
  CHECK(is_acyclic(line));
  CHECK(test::ids(line, reaching(line, 2)) == Ids{"v1", "v2", "v3"});
  CHECK_FALSE(is_acyclic(test::fam("loop")));
  CHECK(is_acyclic(parse_graph("")));
}

TEST_CASE("adjacency matrix counts parallel edges") {
  const AdjacencyMatrix a = adjacency_matrix(test::fam("mult2"));
  CHECK(a.at(0, 0) == 5);
  CHECK(a.at(0, 1) == 2);
  CHECK(a.at(1, 0) == 4);
  CHECK(a.at(1, 1) == 3);
}

TEST_CASE("strongly connected components") {
  const Graph g = test::fam("chain3");
  const auto scc = strongly_connected_components(g);
  CHECK(scc.size() == 3);
  const auto k3 = strongly_connected_components(test::fam("k3"));
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].size() == 3);
}

TEST_CASE("induced subgraph and reordering") {
  const Graph g = test::fam("tri");
  const Graph sub = induced_subgraph(g, test::vs(g, {"v1", "v2"}));
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.edge_count() == 3);
  const std::vector<VertexIndex> order{2, 0, 1};
  const Graph r = reorder_vertices(g, order);
  CHECK(r.vertex_id(0) == "v3");
  CHECK(r.edge_count() == g.edge_count());
  CHECK(r.edge(0).id == g.edge(0).id);
  const std::vector<VertexIndex> bad{0, 0, 1};
  CHECK_THROWS_AS(reorder_vertices(g, bad), Error);
}

TEST_CASE("vertex set algebra") {
  VertexSet a = VertexSet::of(4, {0, 1});
  VertexSet b = VertexSet::of(4, {1, 2});
  CHECK((a | b).size() == 3);
  CHECK((a & b).members() == std::vector<VertexIndex>{1});
  CHECK((a - b).members() == std::vector<VertexIndex>{0});
  CHECK(VertexSet::canonical_less(VertexSet::of(4, {3}), a));
  CHECK(VertexSet::canonical_less(a, VertexSet::of(4, {0, 2})));
  CHECK(VertexSet::full(3).size() == 3);
}
