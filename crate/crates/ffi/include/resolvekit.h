#ifndef RESOLVEKIT_H
#define RESOLVEKIT_H

/* Generated by cbindgen from crates/ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Values 1 to 4 match the command-line exit codes.
 */
typedef enum RkStatus {
  RK_STATUS_OK = 0,
  /**
   * Input violates a precondition of the requested operation.
   */
  RK_STATUS_PRECONDITION = 1,
  /**
   * Malformed graph text or unknown label.
   */
  RK_STATUS_PARSE = 2,
  /**
   * Input is not (strongly) connected.
   */
  RK_STATUS_DISCONNECTED = 3,
  /**
   * Exact search refused: too many vertices for the cap.
   */
  RK_STATUS_CAP_EXCEEDED = 4,
  RK_STATUS_NULL_ARGUMENT = 10,
  RK_STATUS_INVALID_UTF8 = 11,
  /**
   * A Rust panic was caught at the boundary.
   */
  RK_STATUS_INTERNAL = 99,
} RkStatus;

typedef enum RkFamily {
  RK_FAMILY_DE_BRUIJN = 0,
  RK_FAMILY_KAUTZ = 1,
  RK_FAMILY_FLOWERED = 2,
  RK_FAMILY_COMPLETE = 3,
} RkFamily;

typedef enum RkMethod {
  RK_METHOD_THEOREM1 = 0,
  RK_METHOD_SPAN_TREE = 1,
  RK_METHOD_TREE = 2,
} RkMethod;

/**
 * Opaque graph handle.
 */
typedef struct RkGraph RkGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses edge-list text into a new graph handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum RkStatus rk_graph_parse(const char *text, struct RkGraph **out);

/**
 * Generates a topology. `n` is ignored for the flowered and complete
 * families.
 *
 * # Safety
 * `out` must be writable.
 */
enum RkStatus rk_graph_generate(enum RkFamily family, size_t d, size_t n, struct RkGraph **out);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `graph` must come from this library and not be used afterwards.
 */
void rk_graph_free(struct RkGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or null (returns 0).
 */
size_t rk_graph_vertex_count(const struct RkGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or null (returns 0).
 */
size_t rk_graph_edge_count(const struct RkGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or null (returns false).
 */
bool rk_graph_is_directed(const struct RkGraph *graph);

/**
 * Canonical edge-list text of the graph.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum RkStatus rk_graph_to_text(const struct RkGraph *graph, char **out);

/**
 * Exact metric dimension of the graph, or of its line graph when `line`.
 *
 * # Safety
 * `graph` must be a live handle; `out_mu` must be writable.
 */
enum RkStatus rk_metric_dimension(const struct RkGraph *graph,
                                  bool line,
                                  size_t cap,
                                  size_t *out_mu);

/**
 * JSON certificate for the exact metric dimension (schema 1).
 *
 * # Safety
 * `graph` must be a live handle; `out_json` must be writable.
 */
enum RkStatus rk_mu_certificate_json(const struct RkGraph *graph,
                                     bool line,
                                     size_t cap,
                                     char **out_json);

/**
 * JSON certificate for a line-graph construction (schema 1).
 *
 * # Safety
 * `graph` must be a live handle; `out_json` must be writable.
 */
enum RkStatus rk_construct_certificate_json(const struct RkGraph *graph,
                                            enum RkMethod method,
                                            size_t cap,
                                            char **out_json);

/**
 * Whether `landmarks[0..len]` resolves the graph (vertex ids) or its line
 * graph (edge ids) when `line`.
 *
 * # Safety
 * `graph` must be a live handle; `landmarks` must point to `len` readable
 * values; `out_resolving` must be writable.
 */
enum RkStatus rk_is_resolving(const struct RkGraph *graph,
                              const size_t *landmarks,
                              size_t len,
                              bool line,
                              bool *out_resolving);

/**
 * Closed-form metric dimension of `B(d, n)` or `K(d, n)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum RkStatus rk_corollary_mu(enum RkFamily family, size_t d, size_t n, size_t *out);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into this library on the same thread.
 */
const char *rk_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void rk_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RESOLVEKIT_H */
