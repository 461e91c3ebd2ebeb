#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "leavitt/corpus.hpp"
#include "leavitt/error.hpp"
#include "leavitt/report.hpp"
#include "test_util.hpp"

using namespace leavitt;
using nlohmann::json;
using test::fam;
using test::Ids;

TEST_CASE("family specs") {
  CHECK(to_string(parse_family_spec("rose(3)")) == "rose(3)");
  CHECK(to_string(parse_family_spec("enm:2,3")) == "enm(2,3)");
  CHECK(to_string(parse_family_spec("enm(2, 3)")) == "enm(2,3)");
  CHECK(to_string(parse_family_spec("mult2")) == "mult2");
  CHECK_THROWS_AS(parse_family_spec("petal(2)"), Error);
  CHECK_THROWS_AS(parse_family_spec("rose"), Error);
  CHECK_THROWS_AS(parse_family_spec("rose(x)"), Error);
  CHECK_THROWS_AS(parse_family_spec("rose(2"), Error);
  CHECK_THROWS_AS(parse_family_spec("loop(1)"), Error);
  CHECK_THROWS_AS(fam("rose(0)"), Error);
  CHECK_THROWS_AS(fam("enm(1,0)"), Error);
  CHECK_THROWS_AS(fam("line(-2)"), Error);
}

TEST_CASE("family graphs") {
  CHECK(fam("rose(1)") == fam("loop"));
  CHECK(fam("enm(2,1)") == fam("rose(2)"));
  CHECK(fam("k3") == fam("complete(3)"));
  const AdjacencyMatrix m = adjacency_matrix(fam("mult2"));
  CHECK(m.entries == std::vector<std::size_t>{5, 2, 4, 3});
  const Graph line = fam("line(4)");
  CHECK(line.vertex_count() == 4);
  CHECK(line.edge_count() == 3);
  const Graph enm = fam("enm(2,3)");
  CHECK(enm.vertex_count() == 3);
  CHECK(enm.edge_count() == 4);
  CHECK(fam("complete(4)").edge_count() == 12);
  const Graph chain = fam("chain3");
  CHECK(chain.edge_count() == 6);
  CHECK(adjacency_matrix(chain).at(1, 0) == 1);
  const Graph tri = fam("tri");
  CHECK(tri.edge_count() == 6);
}

TEST_CASE("report on the loop") {
  const Report r = build_report(fam("loop"));
  CHECK(r.sr == StableRank::Two);
  CHECK(r.cstar == StableRank::One);
  CHECK(r.k0.free_rank == 1);
  CHECK(r.isolated_cycles);
  CHECK_FALSE(r.condition_l);
  CHECK(r.certificate.kind == "witness_cycle");
  CHECK(r.certificate.edges == Ids{"f1"});
}

TEST_CASE("report on line(5) and rose(3)") {
  const Report line = build_report(fam("line(5)"));
  CHECK(line.sr == StableRank::One);
  CHECK(line.certificate.kind == "acyclic");
  CHECK(line.sinks == Ids{"v5"});
  CHECK(line.lattice_size == 2);
  const Report rose = build_report(fam("rose(3)"));
  CHECK(rose.sr == StableRank::Infinite);
  CHECK(rose.k0.invariant_factors == std::vector<mpz_class>{2});
  CHECK(rose.certificate.kind == "witness_h");
  CHECK(rose.certificate.set.empty());
  CHECK(rose.condition_k);
}

TEST_CASE("report on chain3") {
  const Report r = build_report(fam("chain3"));
  CHECK(r.x0 == Ids{"v2"});
  CHECK(r.x0_closure == Ids{"v1", "v2"});
  CHECK(r.lattice_size == 4);
  CHECK_FALSE(r.cofinal);
  const std::string text = render_text(r);
  CHECK(text.find("sr L(E)           2") != std::string::npos);
  CHECK(text.find("X0 closure        {v1, v2}") != std::string::npos);
}

TEST_CASE("report JSON round trip") {
  for (const char* spec : {"loop", "chain3", "mult2", "k3", "line(3)", "enm(2,3)"}) {
    const Report r = build_report(fam(spec));
    const json j = to_json(r);
    CHECK(j["schema"] == 1);
    CHECK(report_from_json(json::parse(j.dump())) == r);
  }
  CHECK_THROWS_AS(report_from_json(json{{"schema", 1}}), Error);
  CHECK_THROWS_AS(report_from_json(json{{"schema", 2}}), Error);
}

TEST_CASE("report: cap and errors") {
  const Graph g = parse_graph("vertices: a b c\nedge a -> a\nedge b -> b\nedge c -> c\n");
  CHECK_THROWS_AS(build_report(g, 3), Error);
  CHECK(build_report(g, 8).lattice_size == 8);
  CHECK_THROWS_AS(build_report(parse_graph("")), Error);
}

TEST_CASE("big integers go to JSON as strings") {
  CHECK(mpz_to_json(mpz_class(12)) == json(12));
  const mpz_class big("123456789012345678901234567890");
  CHECK(mpz_to_json(big).is_string());
  CHECK(mpz_from_json(mpz_to_json(big)) == big);
  CHECK(mpz_from_json(json(-4)) == -4);
  CHECK_THROWS_AS(mpz_from_json(json(true)), Error);
}

TEST_CASE("verdict and k0 JSON") {
  const Graph g = fam("rose(2)");
  const json v = verdict_to_json(g, stable_rank(g));
  CHECK(v["sr"] == "inf");
  CHECK(v["certificate"]["kind"] == "witness_h");
  const json k = k0_to_json(k0_presentation(fam("mult2")));
  CHECK(k["torsion"] == json::array({2}));
  CHECK(k["free_rank"] == 1);
  CHECK(k["one_torsion_order"] == 2);
  CHECK(k["one_free_gcd"] == 1);
  CHECK(certificate_from_json(to_json(certificate_record(g, stable_rank(g).certificate))).kind == "witness_h");
  CHECK_THROWS_AS(certificate_from_json(json{{"kind", "other"}}), Error);
}

TEST_CASE("lattice and csp JSON") {
  const Graph g = fam("chain3");
  const json l = lattice_to_json(g, enumerate_hs(g));
  CHECK(l["elements"].size() == 4);
  CHECK(l["elements"][2] == json::array({"v1", "v2"}));
  CHECK(l["truncated"] == false);
  const json c = csp_to_json(g, g.vertex("v2"), csp_based_at(g, g.vertex("v2")));
  CHECK(c["paths"] == json::array({json::array({"l2_1"}), json::array({"l2_2"})}));
  CHECK(c["finite"] == true);
}

TEST_CASE("explanations name the branch") {
  for (const char* spec : {"line(2)", "rose(2)", "loop"}) {
    const Graph g = fam(spec);
    const std::string e = explain(g, stable_rank(g));
    CHECK(e.rfind("sr(L(E)) = " + std::string(to_string(stable_rank(g).value)), 0) == 0);
  }
}

TEST_CASE("built-in corpus passes") {
  const auto entries = parse_corpus(builtin_corpus_text());
  CHECK(entries.size() == 11);
  const auto results = run_corpus(entries);
  CHECK(all_pass(results));
  for (const auto& r : results) CHECK_MESSAGE(r.pass(), r.name);
  const json j = corpus_to_json(results);
  CHECK(j["pass"] == true);
  CHECK(render_corpus_text(results).find("11/11 graphs match") != std::string::npos);
}

TEST_CASE("corrupted expectations are reported") {
  const auto entries = parse_corpus(R"j({"schema":1,"entries":[
    {"name":"loop","family":"loop","expect":{"sr":"1"}},
    {"name":"dsl","graph":"vertices: a\nedge a -> a * 2\n","expect":{"sr":"inf"}},
    {"name":"broken","family":"rose(0)","expect":{"sr":"inf"}}]})j");
  const auto results = run_corpus(entries);
  CHECK_FALSE(results[0].pass());
  CHECK(results[0].checks[0].computed == "\"2\"");
  CHECK(results[1].pass());
  CHECK_FALSE(results[2].pass());
  CHECK_FALSE(results[2].error.empty());
  CHECK_FALSE(all_pass(results));
  CHECK(render_corpus_text(results).find("MISMATCH") != std::string::npos);
}

TEST_CASE("corpus parse errors") {
  CHECK_THROWS_AS(parse_corpus("{"), Error);
  CHECK_THROWS_AS(parse_corpus(R"({"schema":1})"), Error);
  CHECK_THROWS_AS(parse_corpus(R"({"schema":3,"entries":[]})"), Error);
}
