/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef ANTIPATH_H
#define ANTIPATH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ApStatus {
  AP_STATUS_OK = 0,
  AP_STATUS_NULL_POINTER = 1,
  AP_STATUS_SELF_LOOP = 2,
  AP_STATUS_DUPLICATE_ARC = 3,
  AP_STATUS_ANTIPARALLEL_ARC = 4,
  AP_STATUS_VERTEX_OUT_OF_RANGE = 5,
  AP_STATUS_PARSE_ERROR = 6,
  AP_STATUS_INVALID_ARGUMENT = 7,
  AP_STATUS_NOT_FOUND = 8,
  AP_STATUS_BUFFER_TOO_SMALL = 9,
  AP_STATUS_INVALID_PATH = 10,
  AP_STATUS_UTF8_ERROR = 11,
  AP_STATUS_INTERNAL_ERROR = 12,
} ApStatus;

/**
 * Opaque graph handle.
 */
typedef struct ApGraph ApGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * New graph on `n` isolated vertices. Never null.
 */
struct ApGraph *ap_graph_new(size_t n);

/**
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void ap_graph_free(struct ApGraph *g);

/**
 * Adds the arc `u -> v`.
 *
 * # Safety
 * `g` must be a live handle.
 */
enum ApStatus ap_graph_add_arc(struct ApGraph *g, size_t u, size_t v);

/**
 * # Safety
 * `g` must be a live handle.
 */
bool ap_graph_has_arc(const struct ApGraph *g, size_t u, size_t v);

/**
 * # Safety
 * `g` must be a live handle or null (returns 0).
 */
size_t ap_graph_vertex_count(const struct ApGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (returns 0).
 */
size_t ap_graph_arc_count(const struct ApGraph *g);

/**
 * Parses the edge-list format (`n m` then `m` lines `u v`). On a parse error
 * the offending 1-based line number is stored in `error_line` if non-null.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum ApStatus ap_graph_parse_edge_list(const char *text, struct ApGraph **out, size_t *error_line);

/**
 * Minimum semidegree and minimum pseudo-semidegree. Either output may be null.
 *
 * # Safety
 * `g` must be a live handle.
 */
enum ApStatus ap_graph_degree_stats(const struct ApGraph *g,
                                    size_t *min_semidegree,
                                    size_t *min_pseudo_semidegree);

/**
 * The graph with every arc reversed, as a new handle.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum ApStatus ap_graph_reverse(const struct ApGraph *g, struct ApGraph **out);

/**
 * Graphviz DOT text; `highlight` (may be null when `highlight_len` is 0)
 * is drawn in red. Release with `ap_string_free`. Null on error.
 *
 * # Safety
 * `g` must be a live handle; `highlight` must hold `highlight_len` elements.
 */
char *ap_graph_to_dot(const struct ApGraph *g, const size_t *highlight, size_t highlight_len);

/**
 * Edge-list text of the graph. Release with `ap_string_free`.
 *
 * # Safety
 * `g` must be a live handle.
 */
char *ap_graph_to_edge_list(const struct ApGraph *g);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void ap_string_free(char *s);

/**
 * Blow-up of the directed `ell`-cycle with blobs of size `b`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ApStatus ap_cycle_blowup(size_t ell, size_t b, struct ApGraph **out);

/**
 * Seeded random oriented graph, see the library documentation for the
 * generator.
 *
 * # Safety
 * `out` must be writable.
 */
enum ApStatus ap_random_oriented_graph(size_t n, double p, uint64_t seed, struct ApGraph **out);

/**
 * Seeded random graph with minimum pseudo-semidegree at least `d`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ApStatus ap_random_with_min_pd(size_t n,
                                    size_t d,
                                    uint64_t seed,
                                    size_t max_attempts,
                                    struct ApGraph **out);

/**
 * `(k - 1 + sqrt(k - 3)) / 2`, for `k >= 4`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ApStatus ap_threshold(size_t k, double *out);

/**
 * Smallest integer strictly above `ap_threshold(k)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ApStatus ap_integer_threshold(size_t k, size_t *out);

/**
 * Writes a longest antipath (lexicographically least) into `buf`.
 * `AP_STATUS_NOT_FOUND` if the graph has no arcs.
 *
 * # Safety
 * `g` must be a live handle, `buf` must hold `cap` elements, `len_out`
 * must be writable, `start_forward` may be null.
 */
enum ApStatus ap_longest_antipath(const struct ApGraph *g,
                                  size_t *buf,
                                  size_t cap,
                                  size_t *len_out,
                                  int *start_forward);

/**
 * Looks for an antipath with `k` arcs. `shape` is 0 for any, 1 for a
 * forward first arc, -1 for a backward first arc. `AP_STATUS_NOT_FOUND` if absent.
 *
 * # Safety
 * As for `ap_longest_antipath`.
 */
enum ApStatus ap_find_antipath(const struct ApGraph *g,
                               size_t k,
                               int shape,
                               size_t *buf,
                               size_t cap,
                               size_t *len_out,
                               int *start_forward);

/**
 * `AP_STATUS_OK` if `seq` is an antipath of the graph, `AP_STATUS_INVALID_PATH` otherwise.
 *
 * # Safety
 * `g` must be a live handle; `seq` must hold `len` elements.
 */
enum ApStatus ap_validate_antipath(const struct ApGraph *g, const size_t *seq, size_t len);

/**
 * Number of arcs of the longest anticycle, 0 if there is none.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum ApStatus ap_longest_anticycle_len(const struct ApGraph *g, size_t *out);

/**
 * Runs the rotation-extension heuristic from the antipath `seq` and writes
 * the result (never shorter than `seq`).
 *
 * # Safety
 * `g` must be a live handle; `seq` must hold `len` elements; outputs as for
 * `ap_longest_antipath`.
 */
enum ApStatus ap_improve(const struct ApGraph *g,
                         const size_t *seq,
                         size_t len,
                         size_t *buf,
                         size_t cap,
                         size_t *len_out,
                         int *start_forward);

/**
 * Static description of a status code. Never null; do not free.
 */
const char *ap_status_message(enum ApStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ANTIPATH_H */
