#ifndef DICOL_DICOL_H
#define DICOL_DICOL_H

/* C interface to the dicol library. Objects are opaque handles owned by the
 * caller; every function returns a status code, and on failure
 * dicol_last_error() describes the problem for the calling thread.
 * Strings returned through char** must be released with dicol_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DICOL_API __declspec(dllexport)
#else
#define DICOL_API __attribute__((visibility("default")))
#endif

typedef enum dicol_status {
  DICOL_OK = 0,
  DICOL_ERR_INVALID_ARGUMENT = 1,
  DICOL_ERR_PARSE = 2,
  DICOL_ERR_LIMIT = 3,
  DICOL_ERR_BUDGET = 4,
  DICOL_ERR_IO = 5,
  DICOL_ERR_INTERNAL = 6,
  DICOL_ERR_NULL = 7
} dicol_status;

/* Outcome of a decision: property holds, property refuted. */
typedef enum dicol_decision { DICOL_NO = 0, DICOL_YES = 1 } dicol_decision;

typedef struct dicol_graph dicol_graph;
typedef struct dicol_digraph dicol_digraph;

/* Called once per emitted line (no trailing newline). */
typedef void (*dicol_line_sink)(const char* line, void* context);

DICOL_API const char* dicol_version(void);
DICOL_API const char* dicol_last_error(void);
DICOL_API const char* dicol_status_name(dicol_status status);
DICOL_API void dicol_string_free(char* s);

/* Graphs */
DICOL_API dicol_status dicol_graph_new(int n, dicol_graph** out);
DICOL_API void dicol_graph_free(dicol_graph* g);
DICOL_API dicol_status dicol_graph_add_edge(dicol_graph* g, int u, int v);
DICOL_API dicol_status dicol_graph_order(const dicol_graph* g, int* n);
DICOL_API dicol_status dicol_graph_size(const dicol_graph* g, int* m);
DICOL_API dicol_status dicol_graph_has_edge(const dicol_graph* g, int u, int v, int* present);
DICOL_API dicol_status dicol_graph_from_graph6(const char* line, dicol_graph** out);
DICOL_API dicol_status dicol_graph_to_graph6(const dicol_graph* g, char** out);
/* Names: grotzsch, cycleN, pathN, completeN, bipartiteA,B, cube. */
DICOL_API dicol_status dicol_graph_named(const char* name, dicol_graph** out);

/* Digraphs */
DICOL_API dicol_status dicol_digraph_new(int n, dicol_digraph** out);
DICOL_API void dicol_digraph_free(dicol_digraph* d);
DICOL_API dicol_status dicol_digraph_add_arc(dicol_digraph* d, int u, int v);
DICOL_API dicol_status dicol_digraph_order(const dicol_digraph* d, int* n);
DICOL_API dicol_status dicol_digraph_arc_count(const dicol_digraph* d, int* m);
DICOL_API dicol_status dicol_digraph_has_arc(const dicol_digraph* d, int u, int v, int* present);
DICOL_API dicol_status dicol_digraph_from_digraph6(const char* line, dicol_digraph** out);
DICOL_API dicol_status dicol_digraph_to_digraph6(const dicol_digraph* d, char** out);
/* Names: d25, dcycleN, dpathN, ttN (transitive tournament), paleyQ,
 * c5-acyclic-a, c5-acyclic-b (acyclic orientations of C5 without a directed
 * path on four arcs). */
DICOL_API dicol_status dicol_digraph_named(const char* name, dicol_digraph** out);
DICOL_API dicol_status dicol_backward_blowup(const dicol_digraph* d, int m, dicol_digraph** out);

/* Reports. Each writes a JSON object to *report_json. Certificates, when
 * produced, are JSON lines passed to `certificates` (may be NULL). */
DICOL_API dicol_status dicol_dicolourable(const dicol_digraph* d, int k, uint64_t budget, int* decision,
                                          char** report_json, dicol_line_sink certificates, void* context);
DICOL_API dicol_status dicol_dichromatic(const dicol_digraph* d, uint64_t budget, int* value, char** report_json,
                                         dicol_line_sink certificates, void* context);
DICOL_API dicol_status dicol_acyclic(const dicol_digraph* d, uint64_t budget, int* value, char** report_json,
                                     dicol_line_sink certificates, void* context);
DICOL_API dicol_status dicol_dicritical(const dicol_digraph* d, int k, uint64_t budget, int* decision,
                                        char** report_json, dicol_line_sink certificates, void* context);
/* D25 = 5-backward-blowup of the directed 5-cycle: dichromatic number 3 and
 * 3-dicritical. */
DICOL_API dicol_status dicol_verify_d25(uint64_t budget, int* decision, char** report_json,
                                        dicol_line_sink certificates, void* context);
DICOL_API dicol_status dicol_order(const dicol_digraph* d, int exact, char** report_json,
                                   dicol_line_sink certificates, void* context);
DICOL_API dicol_status dicol_linforest_digraph(const dicol_digraph* d, uint64_t budget, int* value,
                                               char** report_json, dicol_line_sink certificates, void* context);
DICOL_API dicol_status dicol_linforest_graph(const dicol_graph* g, uint64_t budget, int* value, char** report_json);

/* Enumeration: canonical graph6 lines, sorted. max_degree < 0 means none. */
DICOL_API dicol_status dicol_enumerate(int n, int min_degree, int max_degree, int triangle_free, int threads,
                                       dicol_line_sink sink, void* context, uint64_t* count);

/* Sweep over generated orders [n_min, n_max] (input_path NULL) or over the
 * graph6 lines of input_path. Records are passed to `records` in canonical
 * order; *unresolved counts instances without a decomposition. */
DICOL_API dicol_status dicol_sweep(int n_min, int n_max, const char* input_path, const char* checkpoint_path,
                                   int threads, int timing, dicol_line_sink records, void* context,
                                   uint64_t* unresolved, char** summary_json);

/* Experiments: kind is one of "alpha", "dsparse", "chi-bound", "small-witness",
 * "order-eight", "tournaments". params_json holds kind-specific options. */
DICOL_API dicol_status dicol_experiment(const char* kind, const char* params_json, uint64_t seed, int threads,
                                        int* decision, char** report_json);

DICOL_API dicol_status dicol_constants(double c0, double c1, double c2, double eps, int* decision,
                                       char** report_json);
DICOL_API dicol_status dicol_extremal(int n, char** report_json);

/* Verifies one certificate line. Schema problems give DICOL_ERR_PARSE. */
DICOL_API dicol_status dicol_verify_certificate(const char* line, int* valid, char** report_json);

#ifdef __cplusplus
}
#endif

#endif
