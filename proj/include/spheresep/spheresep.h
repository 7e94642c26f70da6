/*
 * C interface to the spheresep library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an ssep_status; on failure the message is
 * available from ssep_last_error() on the calling thread until the next
 * call. Strings returned through char** out-parameters are owned by the
 * caller and released with ssep_string_free().
 */
#ifndef SPHERESEP_H
#define SPHERESEP_H

#include <stddef.h>
#include <stdint.h>

#if defined(SSEP_BUILDING_LIBRARY)
#define SSEP_API __attribute__((visibility("default")))
#else
#define SSEP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssep_status {
    SSEP_OK = 0,
    SSEP_ERR_INVALID_ARGUMENT = 1,
    SSEP_ERR_PARSE = 2,
    SSEP_ERR_DIMENSION = 3,
    SSEP_ERR_DEGENERATE = 4,
    SSEP_ERR_TOO_LARGE = 5,
    SSEP_ERR_HYPOTHESIS = 6, /* input violates a stated hypothesis */
    SSEP_ERR_DISCONNECTED = 7,
    SSEP_ERR_BUDGET = 8,
    SSEP_ERR_INTERNAL = 9
} ssep_status;

typedef struct ssep_arrangement ssep_arrangement;
typedef struct ssep_graph ssep_graph;

SSEP_API const char* ssep_last_error(void);
SSEP_API const char* ssep_version(void);
SSEP_API void ssep_string_free(char* s);

/* 1e-9 unless SPHERESEPS_EPS holds a positive number. */
SSEP_API double ssep_default_eps(void);

/* ── arrangements ─────────────────────────────────────────────────── */

SSEP_API ssep_status ssep_arrangement_from_json(const char* json, ssep_arrangement** out);
/* spec is "kind:key=value,..."; abstract-graph kinds are rejected here. */
SSEP_API ssep_status ssep_arrangement_generate(const char* spec, uint64_t seed,
                                               ssep_arrangement** out);
SSEP_API ssep_status ssep_arrangement_to_json(const ssep_arrangement* arr, char** out);
SSEP_API size_t ssep_arrangement_size(const ssep_arrangement* arr);
SSEP_API size_t ssep_arrangement_dim(const ssep_arrangement* arr);
/* 1 for chord arrangements, 0 for spheres. */
SSEP_API int ssep_arrangement_is_chords(const ssep_arrangement* arr);
/* Replaces chords by their stereographic images; spheres are copied. */
SSEP_API ssep_status ssep_arrangement_project(const ssep_arrangement* arr, double eps,
                                              ssep_arrangement** out);
SSEP_API void ssep_arrangement_free(ssep_arrangement* arr);

/* ── graphs ───────────────────────────────────────────────────────── */

SSEP_API ssep_status ssep_graph_build(const ssep_arrangement* arr, double eps, ssep_graph** out);
/* Geometric kinds yield their intersection graph. */
SSEP_API ssep_status ssep_graph_generate(const char* spec, uint64_t seed, double eps,
                                         ssep_graph** out);
SSEP_API ssep_status ssep_graph_from_edge_list(const char* text, ssep_graph** out);
SSEP_API ssep_status ssep_graph_to_edge_list(const ssep_graph* g, char** out);
SSEP_API size_t ssep_graph_vertex_count(const ssep_graph* g);
SSEP_API size_t ssep_graph_edge_count(const ssep_graph* g);
SSEP_API void ssep_graph_free(ssep_graph* g);

/* ── separators ───────────────────────────────────────────────────── */

typedef struct ssep_separate_options {
    uint32_t t;    /* forbidden K_{t,t}, at least 2 */
    uint64_t r;    /* 0: ceil(n^(1/(2d+8))) */
    uint64_t h;    /* 0: 72 t^5 (3r+2)^(d+3) */
    double eps;    /* <= 0: ssep_default_eps() */
    uint64_t seed; /* recorded only */
} ssep_separate_options;

/*
 * Runs the separator driver and writes a JSON record
 * {n, d, t, r, h, outcome, separator_size, depth, seed, separator, ...}.
 * *verdict is 1 when the outcome is a verified balanced separator and 0
 * when a verified shallow clique minor was found instead.
 * SSEP_ERR_HYPOTHESIS is returned when the graph contains K_{t,t}.
 */
SSEP_API ssep_status ssep_separate(const ssep_arrangement* arr, const ssep_separate_options* opts,
                                   int* verdict, char** record_json);

/* Same for an abstract graph with a stated dimension d. */
SSEP_API ssep_status ssep_separate_graph(const ssep_graph* g, size_t d,
                                         const ssep_separate_options* opts, int* verdict,
                                         char** record_json);

/*
 * Separator scaling over sizes (e.g. "512..8192") with `seeds` seeds from
 * first_seed. gen_spec names the generator (n is overridden); NULL selects
 * the perturbed honeycomb. Writes CSV rows and the fitted exponent of the
 * median separator size.
 */
SSEP_API ssep_status ssep_scaling(const char* gen_spec, const char* sizes, uint64_t first_seed,
                                  uint32_t seeds, uint32_t t, double eps, unsigned jobs,
                                  char** csv, double* exponent);

/* ── covers ───────────────────────────────────────────────────────── */

/*
 * Hat-graph construction, distance equality check, per-slab projection
 * reports, and a verified cover at scale r. *verdict is 1 iff every check
 * holds. The report is JSON; cover_json (may be NULL) receives the cover.
 */
SSEP_API ssep_status ssep_asdim(const ssep_arrangement* arr, double r, double eps, unsigned jobs,
                                uint64_t seed, int* verdict, char** report_json,
                                char** cover_json);

/* ── verification; *verdict is 1 for valid, 0 for invalid ────────── */

SSEP_API ssep_status ssep_verify_cover(const ssep_graph* g, const char* cover_json, int* verdict,
                                       char** report);
/* ids separated by commas or whitespace. */
SSEP_API ssep_status ssep_verify_separator(const ssep_graph* g, const char* ids, int* verdict,
                                           char** report);
SSEP_API ssep_status ssep_verify_model(const ssep_graph* g, const char* model_json, int* verdict,
                                       char** report);

#ifdef __cplusplus
}
#endif

#endif /* SPHERESEP_H */
