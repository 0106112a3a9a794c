#ifndef PLANTURAN_H
#define PLANTURAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PLANTURAN_BUILDING)
#    define PT_API __declspec(dllexport)
#  else
#    define PT_API __declspec(dllimport)
#  endif
#else
#  define PT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pt_status {
    PT_OK = 0,
    PT_ERR_INVALID_ARGUMENT = 1,
    PT_ERR_PARSE = 2,
    PT_ERR_NOT_FOUND = 3,
    PT_ERR_OVER_CAP = 4,
    PT_ERR_IO = 5,
    PT_ERR_OVERFLOW = 6,
    PT_ERR_PRECONDITION = 7,
    PT_ERR_INTERNAL = 99
} pt_status;

typedef enum pt_verify_status {
    PT_VERIFY_PASS = 0,
    PT_VERIFY_FAIL = 1,
    PT_VERIFY_INCOMPLETE = 2
} pt_verify_status;

typedef struct pt_graph pt_graph;

typedef struct pt_budget {
    int max_vertices;     /* largest n accepted by searches */
    double time_limit;    /* seconds; <= 0 means unlimited */
    int parallel_width;   /* worker threads */
} pt_budget;

/* Message for the last failing call on this thread; empty after success. */
PT_API const char * pt_last_error(void);
PT_API const char * pt_version(void);
/* Releases strings returned through char ** out-parameters. */
PT_API void pt_free(char * s);
PT_API void pt_budget_default(pt_budget * budget);

/* Graphs. edges holds 2*edge_count vertex ids. */
PT_API pt_status pt_graph_create(int vertex_count, const int * edges, size_t edge_count, pt_graph ** out);
/* Names (C5, K4, P3, K1_3, E4, S3x2) or graph6. */
PT_API pt_status pt_graph_parse(const char * text, pt_graph ** out);
PT_API void pt_graph_destroy(pt_graph * g);
PT_API int pt_graph_vertex_count(const pt_graph * g);
PT_API size_t pt_graph_edge_count(const pt_graph * g);
PT_API pt_status pt_graph_to_graph6(const pt_graph * g, char ** out);
PT_API pt_status pt_graph_json(const pt_graph * g, char ** out);

/* Isomorphism tooling. */
PT_API pt_status pt_canonical_graph6(const pt_graph * g, char ** out);
PT_API pt_status pt_canonical_json(const pt_graph * g, char ** out);
PT_API pt_status pt_automorphism_count(const pt_graph * g, uint64_t * out);
PT_API pt_status pt_isomorphic(const pt_graph * a, const pt_graph * b, int * out);

/* Planarity and cycles. forbid is a list such as "C4,C6" or "none". */
PT_API pt_status pt_is_planar(const pt_graph * g, int * out);
PT_API pt_status pt_planarity_json(const pt_graph * g, char ** out);
PT_API pt_status pt_count_cycles(const pt_graph * g, int k, uint64_t * out);
PT_API pt_status pt_is_family_free(const pt_graph * g, const char * forbid, int * out);
/* Writes 0 when g has no even cycle. */
PT_API pt_status pt_shortest_even_cycle(const pt_graph * g, int * out);

/* Copy counting and probes. */
PT_API pt_status pt_count_copies(const pt_graph * pattern, const pt_graph * host, uint64_t * out);
PT_API pt_status pt_count_injective_homs(const pt_graph * pattern, const pt_graph * host, uint64_t * out);
PT_API pt_status pt_count_paths_between(const pt_graph * g, int u, int v, int k, uint64_t * out);
PT_API pt_status pt_count_tripod_vertices(const pt_graph * g, int v, int u, int w, int n1, int n2, int n3, uint64_t * out);

/* Parameters: what is one of "alpha", "beta", "degeneracy",
   "edge-degree-sum", "tree-partition"; index is i for beta and l for the
   tree partition. */
PT_API pt_status pt_params_json(const pt_graph * g, const char * what, int index, char ** out);

/* Constructions. params is "k=5,l=2,n=40"; base (graph text) and
   vertex_set ("0,2") may be NULL. graph_out may be NULL. */
PT_API pt_status pt_construct_json(const char * family, const char * params, const char * base, const char * vertex_set, int pad, int certify, char ** json_out, pt_graph ** graph_out);
PT_API pt_status pt_list_families_json(char ** out);

/* Exhaustive search. The result cache is read from and written to the
   directory in PLANTURAN_CACHE_DIR when use_cache is non-zero. */
PT_API pt_status pt_search_json(int n, const pt_graph * pattern, const char * forbid, int require_planar, int connected_only, const pt_budget * budget, int use_cache, int include_elapsed, char ** out, int * complete);
/* Writes one graph6 line per isomorphism class. */
PT_API pt_status pt_enumerate_graph6(int n, const char * forbid, int require_planar, int connected_only, const pt_budget * budget, char ** out, int * complete);

/* Growth and boundedness probes. n_values is "64,128,256". kind is "paths"
   (lengths = "k", params must carry l) or "tripods" (lengths = "n1,n2,n3"). */
PT_API pt_status pt_growth_json(const char * family, const char * params, const char * base, const char * n_values, char ** out);
PT_API pt_status pt_probe_json(const char * kind, const char * family, const char * params, const char * base, const char * n_values, const char * lengths, char ** out);

/* Claims and tables. */
PT_API pt_status pt_list_claims_json(char ** out);
PT_API pt_status pt_verify_json(const char * claim_id, const pt_budget * budget, int include_runtime, char ** out, pt_verify_status * status);
/* output may be NULL; otherwise <output>.csv and <output>.json are written. */
PT_API pt_status pt_table(const char * spec, const pt_budget * budget, const char * output, char ** csv_out, char ** json_out);

#ifdef __cplusplus
}
#endif

#endif
