#include "leavitt/leavitt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "leavitt/checks.hpp"
#include "leavitt/corpus.hpp"
#include "leavitt/error.hpp"
#include "leavitt/families.hpp"
#include "leavitt/hereditary.hpp"
#include "leavitt/ktheory.hpp"
#include "leavitt/laurent.hpp"
#include "leavitt/rank.hpp"
#include "leavitt/report.hpp"
#include "leavitt/version.hpp"

struct lv_graph {
  leavitt::Graph g;
};

namespace {

using namespace leavitt;
using nlohmann::json;

thread_local std::string last_error;

lv_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return LV_ERR_SYNTAX;
    case ErrorKind::UnknownVertex: return LV_ERR_UNKNOWN_VERTEX;
    case ErrorKind::DuplicateId: return LV_ERR_DUPLICATE_ID;
    case ErrorKind::Precondition: return LV_ERR_PRECONDITION;
    case ErrorKind::EmptyGraph: return LV_ERR_EMPTY_GRAPH;
    case ErrorKind::Inconclusive: return LV_ERR_INCONCLUSIVE;
    case ErrorKind::Limit: return LV_ERR_LIMIT;
    case ErrorKind::Internal: return LV_ERR_INTERNAL;
  }
  return LV_ERR_INTERNAL;
}

lv_status set_error(lv_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
lv_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(LV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(LV_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::size_t cap_or_default(std::size_t cap) { return cap == 0 ? kDefaultLatticeCap : cap; }

lv_rank rank_of(StableRank r) { return static_cast<lv_rank>(static_cast<int>(r)); }

std::string braces(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  for (const auto& id : ids_of(g, s)) out += (out.size() > 1 ? ", " : "") + id;
  return out + "}";
}

std::string edge_list(const Graph& g, const std::vector<EdgeIndex>& edges) {
  std::string out;
  for (EdgeIndex e : edges) out += (out.empty() ? "" : " ") + g.edge(e).id;
  return out;
}

json cycle_json(const Graph& g, const Cycle& c) {
  json edges = json::array();
  for (EdgeIndex e : c.edges) edges.push_back(g.edge(e).id);
  return json{{"base", g.vertex_id(c.base)}, {"edges", edges}};
}

#define LV_REQUIRE(cond)                                                   \
  do {                                                                     \
    if (!(cond)) return set_error(LV_ERR_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

int lv_abi_version(void) { return LV_ABI_VERSION; }

const char* lv_version_string(void) { return leavitt::kVersion; }

const char* lv_status_name(lv_status status) {
  switch (status) {
    case LV_OK: return "ok";
    case LV_ERR_ARGUMENT: return "argument";
    case LV_ERR_SYNTAX: return "syntax";
    case LV_ERR_UNKNOWN_VERTEX: return "unknown-vertex";
    case LV_ERR_DUPLICATE_ID: return "duplicate-id";
    case LV_ERR_PRECONDITION: return "precondition";
    case LV_ERR_EMPTY_GRAPH: return "empty-graph";
    case LV_ERR_INCONCLUSIVE: return "inconclusive";
    case LV_ERR_LIMIT: return "limit";
    case LV_ERR_CHECK_FAILED: return "check-failed";
    case LV_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* lv_last_error(void) { return last_error.c_str(); }

void lv_string_free(char* s) { std::free(s); }

lv_status lv_graph_parse(const char* text, lv_graph** out) {
  LV_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] {
    *out = new lv_graph{parse_graph(text)};
    return LV_OK;
  });
}

lv_status lv_graph_generate(const char* spec, lv_graph** out) {
  LV_REQUIRE(spec && out);
  *out = nullptr;
  return guarded([&] {
    *out = new lv_graph{generate(parse_family_spec(spec))};
    return LV_OK;
  });
}

void lv_graph_free(lv_graph* g) { delete g; }

size_t lv_graph_vertex_count(const lv_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t lv_graph_edge_count(const lv_graph* g) { return g ? g->g.edge_count() : 0; }

lv_status lv_graph_to_dsl(const lv_graph* g, char** out) {
  LV_REQUIRE(g && out);
  return guarded([&] {
    *out = dup(to_dsl(g->g));
    return LV_OK;
  });
}

lv_status lv_graph_to_json(const lv_graph* g, char** out) {
  LV_REQUIRE(g && out);
  return guarded([&] {
    *out = dup(to_json_text(g->g));
    return LV_OK;
  });
}

lv_status lv_stable_rank(const lv_graph* g, size_t cap, lv_format format, lv_rank* out_rank, char** out_text) {
  LV_REQUIRE(g);
  return guarded([&] {
    const RankVerdict v = stable_rank(g->g, cap_or_default(cap));
    if (out_rank) *out_rank = rank_of(v.value);
    if (out_text) {
      *out_text = dup(format == LV_FORMAT_JSON ? dump(verdict_to_json(g->g, v))
                                               : "sr = " + std::string(to_string(v.value)) + "\n" +
                                                     explain(g->g, v) + "\n");
    }
    return LV_OK;
  });
}

lv_status lv_cstar_stable_rank(const lv_graph* g, size_t cap, lv_rank* out_rank) {
  LV_REQUIRE(g && out_rank);
  return guarded([&] {
    *out_rank = rank_of(cstar_stable_rank(g->g, cap_or_default(cap)));
    return LV_OK;
  });
}

lv_status lv_report(const lv_graph* g, size_t cap, lv_format format, char** out) {
  LV_REQUIRE(g && out);
  return guarded([&] {
    const Report r = build_report(g->g, cap_or_default(cap));
    if (format == LV_FORMAT_JSON) {
      *out = dup(dump(to_json(r)));
    } else {
      *out = dup(render_text(r) + "\n" + explain(g->g, stable_rank(g->g, cap_or_default(cap))) + "\n");
    }
    return LV_OK;
  });
}

lv_status lv_k0(const lv_graph* g, lv_format format, char** out) {
  LV_REQUIRE(g && out);
  return guarded([&] {
    const K0Presentation k0 = k0_presentation(g->g);
    if (format == LV_FORMAT_JSON) {
      json j = k0_to_json(k0);
      j["schema"] = kSchemaVersion;
      *out = dup(dump(j));
    } else {
      *out = dup("K0  = " + k0_group_text(k0) + "\n[1] : torsion order " + k0.one_torsion_order.get_str() +
                 ", free gcd " + k0.one_free_gcd.get_str() + "\n");
    }
    return LV_OK;
  });
}

lv_status lv_lattice(const lv_graph* g, size_t cap, lv_format format, char** out) {
  LV_REQUIRE(g && out);
  return guarded([&] {
    const HSLattice l = enumerate_hs(g->g, cap_or_default(cap));
    if (format == LV_FORMAT_JSON) {
      *out = dup(dump(lattice_to_json(g->g, l)));
    } else {
      std::string text;
      for (const auto& h : l.elements) text += braces(g->g, h.set()) + "\n";
      text += std::to_string(l.elements.size()) + " hereditary saturated sets" +
              (l.truncated ? " (truncated at the cap)" : "") + "\n";
      *out = dup(text);
    }
    return LV_OK;
  });
}

lv_status lv_quotient(const lv_graph* g, const char* set, lv_graph** out) {
  LV_REQUIRE(g && set && out);
  *out = nullptr;
  return guarded([&] {
    const HSSet h = HSSet::verify(g->g, parse_vertex_list(g->g, set));
    *out = new lv_graph{quotient_graph(g->g, h)};
    return LV_OK;
  });
}

lv_status lv_restrict(const lv_graph* g, const char* set, lv_graph** out) {
  LV_REQUIRE(g && set && out);
  *out = nullptr;
  return guarded([&] {
    *out = new lv_graph{restriction_graph(g->g, parse_vertex_list(g->g, set))};
    return LV_OK;
  });
}

lv_status lv_ideal_graph(const lv_graph* g, const char* set, lv_graph** out_graph, char** out_witness) {
  LV_REQUIRE(g && set && out_graph && out_witness);
  *out_graph = nullptr;
  *out_witness = nullptr;
  return guarded([&] {
    const HSSet x = HSSet::verify(g->g, parse_vertex_list(g->g, set));
    auto result = ideal_graph(g->g, x);
    if (auto* ig = std::get_if<IdealGraph>(&result)) {
      *out_graph = new lv_graph{std::move(ig->graph)};
    } else {
      const auto& w = std::get<InfiniteWitness>(result);
      *out_witness = dup(dump(json{{"schema", kSchemaVersion},
                                   {"finite", false},
                                   {"witness_cycle", cycle_json(g->g, w.cycle)}}));
    }
    return LV_OK;
  });
}

lv_status lv_csp(const lv_graph* g, const char* vertex, lv_format format, char** out) {
  LV_REQUIRE(g && vertex && out);
  return guarded([&] {
    const VertexIndex v = g->g.vertex(vertex);
    const CspSet s = csp_based_at(g->g, v);
    if (format == LV_FORMAT_JSON) {
      *out = dup(dump(csp_to_json(g->g, v, s)));
    } else if (!s.finite()) {
      *out = dup("infinitely many closed simple paths at " + g->g.vertex_id(v) + ": they can wind around " +
                 edge_list(g->g, s.infinite_witness->edges) + "\n");
    } else {
      std::string text;
      for (const auto& p : s.paths) text += edge_list(g->g, p.edges) + "\n";
      text += std::to_string(s.paths.size()) + " closed simple path(s) at " + g->g.vertex_id(v) + "\n";
      *out = dup(text);
    }
    return LV_OK;
  });
}

lv_status lv_laurent_check(const char* f_text, const char* g_text, lv_format format, int* out_kind, char** out) {
  LV_REQUIRE(f_text && g_text && out);
  return guarded([&] {
    const LaurentPoly f = LaurentPoly::parse(f_text), g = LaurentPoly::parse(g_text);
    const auto bez = bezout(f, g);
    const ReductionOutcome outcome = reduction_witness(f, g);
    const int kind = std::holds_alternative<Reducible>(outcome) ? 0 : std::holds_alternative<IrreducibleProof>(outcome) ? 1 : 2;
    if (out_kind) *out_kind = kind;
    const json j = laurent_check_to_json(f, g, bez, outcome);
    if (format == LV_FORMAT_JSON) {
      *out = dup(dump(j));
      return LV_OK;
    }
    std::ostringstream text;
    text << "f = " << f.to_string() << ", g = " << g.to_string() << "\n";
    if (bez)
      text << "comaximal: (" << bez->first.to_string() << ")*f + (" << bez->second.to_string() << ")*g = 1\n";
    else
      text << "not comaximal: gcd(f, g) is not a unit\n";
    const json& r = j["reduction"];
    if (kind == 0) {
      text << "reducible: f + v*g = " << r["unit"].get<std::string>() << " with v = " << r["v"].get<std::string>()
           << "\n";
    } else if (kind == 1) {
      text << "irreducible: z has order " << r["period"] << " modulo " << r["modulus"].get<std::string>()
           << "; residues z^k are";
      for (const auto& res : r["residues"]) text << " " << res.get<std::string>();
      text << "\nno scalar multiple of a residue equals f mod g = " << r["target"].get<std::string>() << "\n";
    } else {
      text << "inconclusive: no unit f + v*g found in the search window\n";
    }
    *out = dup(text.str());
    return LV_OK;
  });
}

lv_status lv_corpus_run(const char* corpus_json, lv_format format, char** out) {
  LV_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto entries = parse_corpus(corpus_json ? std::string_view(corpus_json) : builtin_corpus_text());
    const auto results = run_corpus(entries);
    *out = dup(format == LV_FORMAT_JSON ? dump(corpus_to_json(results)) : render_corpus_text(results));
    if (!all_pass(results)) return set_error(LV_ERR_CHECK_FAILED, "corpus expectations not met");
    return LV_OK;
  });
}

lv_status lv_fuzz(size_t count, size_t max_vertices, size_t max_edges, uint64_t seed, lv_format format, char** out) {
  LV_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const FuzzResult r = fuzz({count, max_vertices, max_edges, seed});
    if (format == LV_FORMAT_JSON) {
      json j{{"schema", kSchemaVersion}, {"seed", seed}, {"tested", r.tested}, {"pass", !r.failure}};
      if (r.failure)
        j["counterexample"] = {{"property", r.failure->property},
                               {"detail", r.failure->detail},
                               {"graph", r.counterexample_dsl}};
      *out = dup(dump(j));
    } else if (r.failure) {
      *out = dup("counterexample on graph " + std::to_string(r.tested) + " (seed " + std::to_string(seed) +
                 "): " + r.failure->property + ": " + r.failure->detail + "\n" + r.counterexample_dsl);
    } else {
      *out = dup(std::to_string(r.tested) + " random graphs passed every check (seed " + std::to_string(seed) + ")\n");
    }
    if (r.failure) return set_error(LV_ERR_CHECK_FAILED, "counterexample found");
    return LV_OK;
  });
}

}  // extern "C"
