/*
 * C interface to the bottleneck matching solver.
 *
 * Objects are opaque handles created by bm_*_create / bm_* functions and
 * released with the matching bm_*_free. Every fallible call returns a
 * bm_status; on failure bm_last_error() describes the problem for the
 * calling thread. Strings returned through char** are heap allocated and
 * must be released with bm_string_free.
 */
#ifndef BMATCH_BMATCH_H
#define BMATCH_BMATCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BMATCH_BUILDING_LIBRARY)
#    define BMATCH_API __declspec(dllexport)
#  else
#    define BMATCH_API __declspec(dllimport)
#  endif
#elif __GNUC__ >= 4
#  define BMATCH_API __attribute__((visibility("default")))
#else
#  define BMATCH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bm_status {
  BM_OK = 0,
  BM_ERR_INVALID_ARGUMENT = 1,
  BM_ERR_INVALID_INPUT = 2,
  BM_ERR_DUPLICATE_POINT = 3,
  BM_ERR_ODD_POINT_COUNT = 4,
  BM_ERR_TOO_FEW_POINTS = 5,
  BM_ERR_NO_PERFECT_MATCHING = 6,
  BM_ERR_INTERNAL = 7
} bm_status;

typedef struct bm_points bm_points;
typedef struct bm_result bm_result;
typedef struct bm_graph bm_graph;

typedef struct bm_solve_options {
  uint32_t k;           /* neighborhood size, 17 by default */
  int all_pairs;        /* search all pairwise distances on the full disk graph */
  int lengths_only;     /* GNG lengths as candidates, full disk graph decisions */
  uint32_t threads;     /* worker threads for the GNG build, >= 1 */
} bm_solve_options;

BMATCH_API void bm_solve_options_init(bm_solve_options* options);

BMATCH_API const char* bm_last_error(void);
BMATCH_API const char* bm_status_name(bm_status status);
BMATCH_API void bm_string_free(char* s);

/* Point sets. Coordinates are integers in units of 1e-6. */
BMATCH_API bm_status bm_points_from_file(const char* path, bm_points** out);
BMATCH_API bm_status bm_points_from_text(const char* text, size_t length, bm_points** out);
BMATCH_API bm_status bm_points_from_scaled(const int64_t* xy, size_t count, bm_points** out);
/* kind: "uniform", "grid", "cocircular" or "clustered" */
BMATCH_API bm_status bm_points_generate(const char* kind, size_t count, uint64_t seed, bm_points** out);
BMATCH_API size_t bm_points_size(const bm_points* points);
BMATCH_API bm_status bm_points_get(const bm_points* points, size_t index, int64_t* x, int64_t* y);
BMATCH_API bm_status bm_points_format(const bm_points* points, char** text);
BMATCH_API void bm_points_free(bm_points* points);

/* Bottleneck matching. */
BMATCH_API bm_status bm_solve(const bm_points* points, const bm_solve_options* options, bm_result** out);
BMATCH_API bm_status bm_result_r_star_sq(const bm_result* result, char** decimal);
BMATCH_API double bm_result_r_star(const bm_result* result);
BMATCH_API size_t bm_result_pair_count(const bm_result* result);
BMATCH_API bm_status bm_result_pair(const bm_result* result, size_t index, uint32_t* a, uint32_t* b);
BMATCH_API size_t bm_result_oracle_calls(const bm_result* result);
BMATCH_API size_t bm_result_gng_edge_count(const bm_result* result);
BMATCH_API bm_status bm_result_json(const bm_result* result, int include_timings, char** json);
BMATCH_API bm_status bm_render_svg(const bm_points* points, const bm_result* result, char** svg);
BMATCH_API void bm_result_free(bm_result* result);

/* Geographic neighborhood graph. */
BMATCH_API bm_status bm_gng_build(const bm_points* points, uint32_t k, int lengths_only, bm_graph** out);
BMATCH_API size_t bm_graph_edge_count(const bm_graph* graph);
BMATCH_API size_t bm_graph_length_count(const bm_graph* graph);
BMATCH_API bm_status bm_graph_edge(const bm_graph* graph, size_t index, uint32_t* a, uint32_t* b);
BMATCH_API bm_status bm_graph_listing(const bm_graph* graph, char** text);
BMATCH_API void bm_graph_free(bm_graph* graph);

/* Benchmark report as CSV. kinds is a comma-separated list. */
BMATCH_API bm_status bm_bench_csv(const size_t* sizes, size_t size_count, const char* kinds,
                                  size_t repetitions, uint64_t seed, int dense_decision,
                                  uint32_t threads, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* BMATCH_BMATCH_H */
