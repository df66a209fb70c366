#ifndef UNICWD_H
#define UNICWD_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Problems accepted by `unicwd_solve`.
 */
typedef enum UnicwdProblem {
  UNICWD_PROBLEM_MIS = 0,
  UNICWD_PROBLEM_VC = 1,
  UNICWD_PROBLEM_DS = 2,
} UnicwdProblem;

/**
 * Result codes of every fallible call.
 */
typedef enum UnicwdStatus {
  UNICWD_STATUS_OK = 0,
  UNICWD_STATUS_NULL_POINTER = 1,
  UNICWD_STATUS_INVALID_UTF8 = 2,
  UNICWD_STATUS_PARSE = 3,
  UNICWD_STATUS_NOT_UNIGRAPH = 4,
  UNICWD_STATUS_SIZE_GUARD = 5,
  UNICWD_STATUS_INVALID_ARGUMENT = 6,
  UNICWD_STATUS_INTERNAL = 7,
} UnicwdStatus;

/**
 * Opaque k-expression handle.
 */
typedef struct UnicwdExpr UnicwdExpr;

/**
 * Opaque graph handle.
 */
typedef struct UnicwdGraph UnicwdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an edge list. On success `*out` owns a new graph.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum UnicwdStatus unicwd_graph_parse(const char *text, struct UnicwdGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be freed twice. Null is ignored.
 */
void unicwd_graph_free(struct UnicwdGraph *g);

/**
 * # Safety
 * All pointers must be valid.
 */
enum UnicwdStatus unicwd_graph_counts(const struct UnicwdGraph *g, size_t *vertices, size_t *edges);

/**
 * Writes the graph as an edge list with sorted vertices and edges.
 *
 * # Safety
 * All pointers must be valid.
 */
enum UnicwdStatus unicwd_graph_to_string(const struct UnicwdGraph *g, char **out);

/**
 * # Safety
 * All pointers must be valid.
 */
enum UnicwdStatus unicwd_graph_is_unigraph(const struct UnicwdGraph *g, bool *out);

/**
 * Builds an expression with at most five labels for a unigraph.
 *
 * # Safety
 * All pointers must be valid.
 */
enum UnicwdStatus unicwd_synthesize(const struct UnicwdGraph *g, struct UnicwdExpr **out);

/**
 * Parses and validates an expression.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum UnicwdStatus unicwd_expr_parse(const char *text, struct UnicwdExpr **out);

/**
 * # Safety
 * `e` must come from this library and not be freed twice. Null is ignored.
 */
void unicwd_expr_free(struct UnicwdExpr *e);

/**
 * # Safety
 * All pointers must be valid.
 */
enum UnicwdStatus unicwd_expr_to_string(const struct UnicwdExpr *e, char **out);

/**
 * Number of distinct labels.
 *
 * # Safety
 * All pointers must be valid.
 */
enum UnicwdStatus unicwd_expr_width(const struct UnicwdExpr *e, size_t *out);

/**
 * # Safety
 * All pointers must be valid.
 */
enum UnicwdStatus unicwd_expr_evaluate(const struct UnicwdExpr *e, struct UnicwdGraph **out);

/**
 * Solves `problem` over the expression. `witness` may be null; otherwise
 * it receives the comma-separated sorted vertex names of a solution.
 *
 * # Safety
 * `e` and `value` must be valid; `witness` valid or null.
 */
enum UnicwdStatus unicwd_solve(const struct UnicwdExpr *e,
                               uint32_t problem,
                               size_t *value,
                               char **witness);

/**
 * # Safety
 * `s` must come from this library and not be freed twice. Null is ignored.
 */
void unicwd_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next call into the library on the same thread.
 */
const char *unicwd_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNICWD_H */
