#ifndef TOKENSLIDE_TOKENSLIDE_H
#define TOKENSLIDE_TOKENSLIDE_H

#include <stddef.h>

#if defined(_WIN32)
#define TS_API __declspec(dllexport)
#else
#define TS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handles. Every handle returned through an out parameter is owned by
 * the caller and released with the matching *_free function. */
typedef struct ts_context ts_context;
typedef struct ts_graph ts_graph;
typedef struct ts_labeled ts_labeled;

typedef enum ts_status {
    TS_OK = 0,
    TS_E_INDEX_OUT_OF_RANGE = 1,
    TS_E_LOOP_EDGE,
    TS_E_N_EXCEEDS_WIDTH,
    TS_E_CYCLE_TOO_SMALL,
    TS_E_SUBSET_VIOLATION,
    TS_E_N_TOO_LARGE,
    TS_E_MALFORMED_GRAPH6,
    TS_E_MALFORMED_INPUT,
    TS_E_EXPLOSION_CAP,
    TS_E_NOT_SPLIT,
    TS_E_NOT_CONNECTED,
    TS_E_NOT_INDEPENDENT,
    TS_E_N_EXCEEDS_K,
    TS_E_CONDITION_VIOLATED,
    TS_E_K_MISMATCH,
    TS_E_TOO_LARGE_FOR_ISO,
    TS_E_UNIVERSE_OVERLAP,
    TS_E_NO_STABLE_SET_OF_SIZE_K,
    TS_E_TOO_FEW_POINTS,
    TS_E_TOO_MANY_POINTS,
    TS_E_DEGENERATE_SEGMENT,
    TS_E_GENERAL_POSITION_VIOLATED,
    TS_E_COORDINATE_RANGE,
    TS_E_UNKNOWN_SEARCH,
    TS_E_INVALID_ARGUMENT,
    TS_E_INTERNAL
} ts_status;

/* Reconfiguration graph kinds for ts_build. */
typedef enum ts_kind { TS_KIND_TSK = 0, TS_KIND_TS, TS_KIND_LK, TS_KIND_FK } ts_kind;

/* Flags for ts_geometry. */
enum {
    TS_GEOM_FLIP_GRAPH = 1,
    TS_GEOM_DELAUNAY = 2,
    TS_GEOM_CHECK_TS_ISO = 4
};

TS_API const char* ts_status_name(ts_status status);

/* Context: error message of the last failed call, node budget, thread count. */
TS_API ts_context* ts_context_new(void);
TS_API void ts_context_free(ts_context* ctx);
TS_API const char* ts_last_error(const ts_context* ctx);
TS_API void ts_context_set_node_budget(ts_context* ctx, size_t budget);
TS_API size_t ts_context_node_budget(const ts_context* ctx);
TS_API void ts_context_set_threads(ts_context* ctx, unsigned threads);

/* Strings returned by the library are released with ts_string_free. */
TS_API void ts_string_free(char* s);

/* Graphs. edges holds 2*m vertex indices. */
TS_API ts_status ts_graph_new(ts_context* ctx, size_t n, const size_t* edges, size_t m, ts_graph** out);
TS_API ts_status ts_graph_from_graph6(ts_context* ctx, const char* text, ts_graph** out);
TS_API ts_status ts_graph_from_json(ts_context* ctx, const char* json, ts_graph** out);
/* family: path, cycle, complete, edgeless, star, complete_bipartite (a, b),
 * complete_minus_edge, paw, diamond, claw, kite. */
TS_API ts_status ts_graph_generate(ts_context* ctx, const char* family, size_t a, size_t b, ts_graph** out);
TS_API ts_status ts_graph_complement(ts_context* ctx, const ts_graph* g, ts_graph** out);
TS_API ts_status ts_graph_add_isolated(ts_context* ctx, const ts_graph* g, size_t t, ts_graph** out);
TS_API void ts_graph_free(ts_graph* g);
TS_API size_t ts_graph_order(const ts_graph* g);
TS_API size_t ts_graph_size(const ts_graph* g);
TS_API ts_status ts_graph_to_graph6(ts_context* ctx, const ts_graph* g, char** out);
TS_API ts_status ts_graph_to_json(ts_context* ctx, const ts_graph* g, char** out);
TS_API ts_status ts_graph_to_dot(ts_context* ctx, const ts_graph* g, char** out);

/* Isomorph-free enumeration as newline-separated graph6.
 * family: trees (n <= 10), graphs (n <= 8), connected (n <= 7). */
TS_API ts_status ts_enumerate(ts_context* ctx, const char* family, size_t n, char** out);

/* Reconfiguration graphs. k is ignored for TS_KIND_TS. */
TS_API ts_status ts_build(ts_context* ctx, const ts_graph* g, ts_kind kind, size_t k, ts_labeled** out);
TS_API void ts_labeled_free(ts_labeled* lg);
TS_API size_t ts_labeled_order(const ts_labeled* lg);
TS_API size_t ts_labeled_size(const ts_labeled* lg);
TS_API ts_status ts_labeled_to_json(ts_context* ctx, const ts_labeled* lg, char** out);
TS_API ts_status ts_labeled_to_dot(ts_context* ctx, const ts_labeled* lg, char** out);

/* Property report JSON (chromatic number, planarity with witness, Eulerian
 * flags, girth, clique number, connectivity, diameter). */
TS_API ts_status ts_analyze_graph(ts_context* ctx, const ts_graph* g, char** out);
TS_API ts_status ts_analyze_labeled(ts_context* ctx, const ts_labeled* lg, char** out);
/* Canonical graph6 of a graph; equal strings iff isomorphic. */
TS_API ts_status ts_canonical_graph6(ts_context* ctx, const ts_graph* g, char** out);

/* Realization JSON. family: complete, path, cycle, star. */
TS_API ts_status ts_realize(ts_context* ctx, const char* family, size_t n, size_t k, char** out);
TS_API ts_status ts_realize_split(ts_context* ctx, const ts_graph* f, size_t k, char** out);
TS_API ts_status ts_search_realizer(ts_context* ctx, const ts_graph* target, size_t k, size_t max_n, char** out);

/* Join decomposition JSON; h1 and h2 list vertex indices of g1 and g2. */
TS_API ts_status ts_decompose_join(ts_context* ctx, const ts_graph* g1, const size_t* h1, size_t h1_len,
                                   const ts_graph* g2, const size_t* h2, size_t h2_len, size_t k, char** out);

/* Geometry report JSON for a point set given as [[x, y], ...]. */
TS_API ts_status ts_geometry(ts_context* ctx, const char* points_json, unsigned flags, char** out);

/* Named search report JSON: trees7, trees8, planar6, cycles-planarity. */
TS_API ts_status ts_run_search(ts_context* ctx, const char* name, int timing, char** out);

#ifdef __cplusplus
}
#endif

#endif
