/* C interface to the openpack library. Graphs are opaque handles; every
 * fallible call returns an openpack_status and leaves a message retrievable
 * with openpack_last_error() on the calling thread. Strings returned through
 * char** out-parameters are owned by the caller and released with
 * openpack_string_free(). */
#ifndef OPENPACK_H
#define OPENPACK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(OPENPACK_BUILDING)
#    define OPENPACK_API __declspec(dllexport)
#  else
#    define OPENPACK_API __declspec(dllimport)
#  endif
#else
#  define OPENPACK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct openpack_graph openpack_graph;

typedef enum openpack_status {
  OPENPACK_OK = 0,
  OPENPACK_INVALID_ARGUMENT = 1,
  OPENPACK_PARSE_ERROR = 2,
  OPENPACK_CAP_EXCEEDED = 3,
  OPENPACK_UNDEFINED = 4,     /* invariant undefined, e.g. gamma_t with an isolated vertex */
  OPENPACK_HYPOTHESIS = 5,    /* input outside a construction's domain */
  OPENPACK_IO_ERROR = 6,
  OPENPACK_INTERNAL = 7
} openpack_status;

typedef enum openpack_transform {
  OPENPACK_TWO_STEP = 0,
  OPENPACK_SQUARE = 1,
  OPENPACK_COMPLEMENT = 2
} openpack_transform;

typedef enum openpack_product {
  OPENPACK_CARTESIAN = 0,
  OPENPACK_DIRECT = 1,
  OPENPACK_STRONG = 2,
  OPENPACK_LEXICOGRAPHIC = 3,
  OPENPACK_CORONA = 4
} openpack_product;

OPENPACK_API const char* openpack_last_error(void);
OPENPACK_API const char* openpack_status_name(openpack_status status);
OPENPACK_API void openpack_string_free(char* s);
OPENPACK_API size_t openpack_solver_cap(void);

/* `pairs` holds 2 * edge_count vertex indices. */
OPENPACK_API openpack_status openpack_graph_from_edges(size_t order, const uint32_t* pairs, size_t edge_count,
                                                       openpack_graph** out);
OPENPACK_API openpack_status openpack_graph_from_graph6(const char* text, openpack_graph** out);
/* "n m" header followed by m lines "u v". */
OPENPACK_API openpack_status openpack_graph_from_edge_list(const char* text, openpack_graph** out);
OPENPACK_API void openpack_graph_free(openpack_graph* g);

OPENPACK_API size_t openpack_graph_order(const openpack_graph* g);
OPENPACK_API size_t openpack_graph_size(const openpack_graph* g);
/* Writes the edges (u < v, lexicographic) into `pairs`, which must hold
 * 2 * capacity entries; fails with OPENPACK_INVALID_ARGUMENT when too small. */
OPENPACK_API openpack_status openpack_graph_edges(const openpack_graph* g, uint32_t* pairs, size_t capacity);
OPENPACK_API openpack_status openpack_graph_to_graph6(const openpack_graph* g, char** out);
OPENPACK_API openpack_status openpack_graph_to_edge_list(const openpack_graph* g, char** out);
OPENPACK_API openpack_status openpack_is_isomorphic(const openpack_graph* g, const openpack_graph* h, int* out);

/* `params_json` is an object such as {"n": 6} or {"r": 3, "s": 2}; NULL means {}. */
OPENPACK_API openpack_status openpack_generate(const char* family, const char* params_json, openpack_graph** out);
/* JSON array of the family names accepted by openpack_generate. */
OPENPACK_API openpack_status openpack_family_names(char** out_json);

OPENPACK_API openpack_status openpack_transform_graph(const openpack_graph* g, openpack_transform op,
                                                      openpack_graph** out);
/* `layout_json` may be NULL; otherwise receives the vertex layout of the result. */
OPENPACK_API openpack_status openpack_product_graph(const openpack_graph* g, const openpack_graph* h,
                                                    openpack_product op, openpack_graph** out, char** layout_json);

/* `what` is a comma-separated list of invariant names, or NULL / "all". */
OPENPACK_API openpack_status openpack_invariants(const openpack_graph* g, const char* what, int certify,
                                                 char** out_json);
/* `labels` may be NULL; otherwise it receives order() class labels in 1..value. */
OPENPACK_API openpack_status openpack_open_packing_partition(const openpack_graph* g, uint32_t* value,
                                                             uint32_t* labels);
OPENPACK_API openpack_status openpack_tree_opp(const openpack_graph* g, uint32_t* labels);

/* Calls `fn` with the graph6 text of every labeled graph on `order` vertices
 * in enumeration order; a nonzero return stops the walk. */
typedef int (*openpack_graph_fn)(const char* graph6, void* user);
OPENPACK_API openpack_status openpack_enumerate(size_t order, openpack_graph_fn fn, void* user);

/* Runs a verification request (JSON) and streams one JSON line per result row.
 * `summary` (nullable) receives the rendered table, `violated` (nullable) the
 * number of violated rows. */
typedef void (*openpack_line_fn)(const char* line, void* user);
OPENPACK_API openpack_status openpack_verify(const char* request_json, openpack_line_fn fn, void* user,
                                             char** summary, uint64_t* violated);

#ifdef __cplusplus
}
#endif

#endif
