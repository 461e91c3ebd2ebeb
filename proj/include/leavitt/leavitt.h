/*
 * leavitt: stable rank and K-theory of Leavitt path algebras of finite graphs.
 *
 * C interface. Graphs are opaque handles. Every function returns an
 * lv_status; on failure a message is available from lv_last_error() on the
 * calling thread. Strings handed out through `char**` parameters are owned by
 * the caller and released with lv_string_free().
 */
#ifndef LEAVITT_H
#define LEAVITT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LV_API __declspec(dllexport)
#elif defined(__GNUC__)
#define LV_API __attribute__((visibility("default")))
#else
#define LV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define LV_ABI_VERSION 1

typedef enum lv_status {
  LV_OK = 0,
  LV_ERR_ARGUMENT = 1,       /* null pointer or malformed argument */
  LV_ERR_SYNTAX = 2,         /* unparseable graph, set, polynomial or JSON */
  LV_ERR_UNKNOWN_VERTEX = 3,
  LV_ERR_DUPLICATE_ID = 4,
  LV_ERR_PRECONDITION = 5,   /* e.g. a set that is not hereditary saturated */
  LV_ERR_EMPTY_GRAPH = 6,
  LV_ERR_INCONCLUSIVE = 7,   /* lattice cap reached before a decision */
  LV_ERR_LIMIT = 8,          /* path enumeration cap exceeded */
  LV_ERR_CHECK_FAILED = 9,   /* corpus mismatch or fuzz counterexample */
  LV_ERR_INTERNAL = 10
} lv_status;

typedef enum lv_rank { LV_RANK_ONE = 1, LV_RANK_TWO = 2, LV_RANK_INFINITE = 3 } lv_rank;

typedef enum lv_format { LV_FORMAT_TEXT = 0, LV_FORMAT_JSON = 1 } lv_format;

typedef struct lv_graph lv_graph;

LV_API int lv_abi_version(void);
LV_API const char* lv_version_string(void);
LV_API const char* lv_status_name(lv_status status);
/* Message of the last failed call on this thread; "" after a success. */
LV_API const char* lv_last_error(void);
LV_API void lv_string_free(char* s);

/* Graph text is either the line DSL or a JSON document. */
LV_API lv_status lv_graph_parse(const char* text, lv_graph** out);
/* Family spec such as "rose(3)", "enm(2,3)" or "mult2". */
LV_API lv_status lv_graph_generate(const char* spec, lv_graph** out);
LV_API void lv_graph_free(lv_graph* g);
LV_API size_t lv_graph_vertex_count(const lv_graph* g);
LV_API size_t lv_graph_edge_count(const lv_graph* g);
LV_API lv_status lv_graph_to_dsl(const lv_graph* g, char** out);
LV_API lv_status lv_graph_to_json(const lv_graph* g, char** out);

/* `cap` bounds the hereditary saturated lattice enumeration; 0 means the
 * default. `out_rank` and `out_text` may each be null. */
LV_API lv_status lv_stable_rank(const lv_graph* g, size_t cap, lv_format format, lv_rank* out_rank,
                                char** out_text);
LV_API lv_status lv_cstar_stable_rank(const lv_graph* g, size_t cap, lv_rank* out_rank);
LV_API lv_status lv_report(const lv_graph* g, size_t cap, lv_format format, char** out);
LV_API lv_status lv_k0(const lv_graph* g, lv_format format, char** out);
LV_API lv_status lv_lattice(const lv_graph* g, size_t cap, lv_format format, char** out);

/* `set` is a comma-separated vertex list. Results are new graphs. */
LV_API lv_status lv_quotient(const lv_graph* g, const char* set, lv_graph** out);
LV_API lv_status lv_restrict(const lv_graph* g, const char* set, lv_graph** out);
/* On a finite result *out_graph is set and *out_witness is null; otherwise
 * *out_graph is null and *out_witness holds the witness cycle as JSON. */
LV_API lv_status lv_ideal_graph(const lv_graph* g, const char* set, lv_graph** out_graph, char** out_witness);

LV_API lv_status lv_csp(const lv_graph* g, const char* vertex, lv_format format, char** out);

/* Polynomials use the syntax "1+z", "1+z^2", "3*z^-2". `out_kind` receives
 * 0 (reducible), 1 (irreducible, with proof) or 2 (inconclusive). */
LV_API lv_status lv_laurent_check(const char* f, const char* g, lv_format format, int* out_kind, char** out);

/* Runs the built-in corpus when `corpus_json` is null. Returns
 * LV_ERR_CHECK_FAILED when some expectation is not met; the table is still
 * written to *out. */
LV_API lv_status lv_corpus_run(const char* corpus_json, lv_format format, char** out);

/* Cross-module property checks on seeded random graphs. Returns
 * LV_ERR_CHECK_FAILED with the counterexample in *out on failure. */
LV_API lv_status lv_fuzz(size_t count, size_t max_vertices, size_t max_edges, uint64_t seed, lv_format format,
                         char** out);

#ifdef __cplusplus
}
#endif

#endif /* LEAVITT_H */
