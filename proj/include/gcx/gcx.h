#ifndef GCX_GCX_H
#define GCX_GCX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GCX_API __declspec(dllexport)
#else
#define GCX_API __attribute__((visibility("default")))
#endif

typedef enum gcx_status {
  GCX_OK = 0,
  GCX_ERR_INVALID = 1,   /* bad argument or precondition */
  GCX_ERR_BOUND = 3,     /* simplex cap, dense-solve cap or other size limit */
  GCX_ERR_NUMERICAL = 4, /* floating-point certification failed */
  GCX_ERR_INTERNAL = 5
} gcx_status;

typedef enum gcx_format { GCX_FORMAT_CSV = 0, GCX_FORMAT_JSON = 1 } gcx_format;

typedef struct gcx_graph gcx_graph;
typedef struct gcx_complex gcx_complex;

/* Message for the last failing call on this thread, "" if none. */
GCX_API const char* gcx_last_error(void);
GCX_API const char* gcx_version(void);
/* Frees strings returned through char** out-parameters. */
GCX_API void gcx_string_free(char* s);

/* Graphs. family is one of cycle-complement, path-complement, circulant,
   dihedral-complement, paley, prime, barycentric-complement. gens may be NULL. */
GCX_API gcx_status gcx_graph_family(const char* family, int n, const int* gens, size_t ngens, int q,
                                    gcx_graph** out);
GCX_API gcx_status gcx_graph_from_edges(int n, const int* edges, size_t nedges, gcx_graph** out);
GCX_API gcx_status gcx_graph_from_json(const char* text, gcx_graph** out);
GCX_API gcx_status gcx_graph_to_json(const gcx_graph* g, char** out);
GCX_API gcx_status gcx_graph_complement(const gcx_graph* g, gcx_graph** out);
GCX_API int gcx_graph_vertex_count(const gcx_graph* g);
GCX_API size_t gcx_graph_edge_count(const gcx_graph* g);
GCX_API void gcx_graph_free(gcx_graph* g);

/* Complexes. cap = 0 selects the default simplex cap. */
GCX_API gcx_status gcx_complex_from_graph(const gcx_graph* g, size_t cap, gcx_complex** out);
GCX_API gcx_status gcx_complex_dual_cycle(int n, gcx_complex** out);
GCX_API gcx_status gcx_complex_dual_path(int n, gcx_complex** out);
GCX_API size_t gcx_complex_size(const gcx_complex* k);
GCX_API int gcx_complex_dimension(const gcx_complex* k);
GCX_API void gcx_complex_free(gcx_complex* k);

/* Vector results: writes up to cap entries into buf and the full length into len.
   Passing buf = NULL queries the length. */
GCX_API gcx_status gcx_complex_fvector(const gcx_complex* k, int64_t* buf, size_t cap, size_t* len);
GCX_API gcx_status gcx_complex_betti(const gcx_complex* k, int64_t* buf, size_t cap, size_t* len);
GCX_API gcx_status gcx_complex_euler(const gcx_complex* k, int64_t* chi);
/* Wu characteristic of order 1..4, decimal string. */
GCX_API gcx_status gcx_complex_wu(const gcx_complex* k, int order, char** out);
GCX_API gcx_status gcx_complex_wu_betti(const gcx_complex* k, int64_t* buf, size_t cap, size_t* len);

/* Exact rationals as a JSON array of "p/q" strings. */
GCX_API gcx_status gcx_graph_curvature(const gcx_graph* g, char** out);
/* Decimal strings. */
GCX_API gcx_status gcx_graph_rooted_trees(const gcx_graph* g, char** out);
GCX_API gcx_status gcx_graph_rooted_forests(const gcx_graph* g, char** out);
/* JSON {"class": ..., "betti": [...], "certificate": {...}?}. */
GCX_API gcx_status gcx_graph_classify(const gcx_graph* g, char** out);

/* Text reports, the same documents the command-line tool prints. */
typedef struct gcx_request {
  const char* command; /* family fvector betti curvature renorm lefschetz wu trees zeta spectrum classify table */
  const char* table;   /* table name for command "table" */
  const char* family;
  int n;
  const int* gens;
  size_t ngens;
  int q;
  int max_n;           /* < 0: table default */
  gcx_format format;
  size_t simplex_cap;  /* 0: default */
  int printed_order;
  int threads;         /* 0: hardware concurrency */
} gcx_request;

GCX_API void gcx_request_init(gcx_request* r);
GCX_API gcx_status gcx_run(const gcx_request* r, char** out);
/* Newline-separated list of table names. */
GCX_API gcx_status gcx_table_names(char** out);

#ifdef __cplusplus
}
#endif

#endif
