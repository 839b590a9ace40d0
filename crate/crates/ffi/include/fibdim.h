#ifndef FIBDIM_H
#define FIBDIM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The first five agree with the CLI exit codes.
 */
typedef enum FibdimStatus {
  FIBDIM_STATUS_OK = 0,
  FIBDIM_STATUS_PARSE = 1,
  FIBDIM_STATUS_NOT_PARTIAL_CUBE = 2,
  FIBDIM_STATUS_RESOURCE_CAP = 3,
  FIBDIM_STATUS_VERIFICATION = 4,
  FIBDIM_STATUS_INVALID_ARGUMENT = 5,
  FIBDIM_STATUS_NULL_POINTER = 6,
  FIBDIM_STATUS_PANIC = 7,
} FibdimStatus;

/**
 * A certified isometric embedding into a Fibonacci cube.
 */
typedef struct FibdimEmbedding FibdimEmbedding;

/**
 * An undirected simple graph.
 */
typedef struct FibdimGraph FibdimGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. Valid
 * until the next library call on the same thread; do not free.
 */
const char *fibdim_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *fibdim_version(void);

/**
 * Parses a NUL-terminated edge list (`u v` per line, `#` comments).
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
enum FibdimStatus fibdim_graph_from_edge_list(const char *text, struct FibdimGraph **out);

/**
 * Parses one graph6 record of `len` bytes.
 *
 * # Safety
 * `data` must point to `len` readable bytes; `out` must be writable.
 */
enum FibdimStatus fibdim_graph_from_graph6(const uint8_t *data,
                                           size_t len,
                                           struct FibdimGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be freed twice. Null is a no-op.
 */
void fibdim_graph_free(struct FibdimGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t fibdim_graph_vertex_count(const struct FibdimGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t fibdim_graph_edge_count(const struct FibdimGraph *g);

/**
 * Isometric dimension (number of Θ-classes).
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum FibdimStatus fibdim_idim(const struct FibdimGraph *g, size_t *out);

/**
 * Lattice dimension.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum FibdimStatus fibdim_ldim(const struct FibdimGraph *g, size_t *out);

/**
 * Exact Fibonacci dimension. Fails with `RESOURCE_CAP` when the graph has
 * more than `max_k` Θ-classes. If `out_embedding` is non-null it receives
 * a certified embedding handle.
 *
 * # Safety
 * `g` must be a live graph handle; `out_dim` must be writable;
 * `out_embedding` must be null or writable.
 */
enum FibdimStatus fibdim_fdim_exact(const struct FibdimGraph *g,
                                    size_t max_k,
                                    size_t *out_dim,
                                    struct FibdimEmbedding **out_embedding);

/**
 * Dimension `f'` of the matching-based embedding; `f' <= 3/2 fdim`.
 *
 * # Safety
 * As for [`fibdim_fdim_exact`].
 */
enum FibdimStatus fibdim_fdim_approx(const struct FibdimGraph *g,
                                     size_t *out_dim,
                                     struct FibdimEmbedding **out_embedding);

/**
 * # Safety
 * `e` must be null or a live embedding handle.
 */
size_t fibdim_embedding_dimension(const struct FibdimEmbedding *e);

/**
 * # Safety
 * `e` must be null or a live embedding handle.
 */
size_t fibdim_embedding_vertex_count(const struct FibdimEmbedding *e);

/**
 * Label of vertex `v` as a `'0'`/`'1'` string, leftmost character first
 * coordinate. Null on error; free with [`fibdim_string_free`].
 *
 * # Safety
 * `e` must be a live embedding handle.
 */
char *fibdim_embedding_label(const struct FibdimEmbedding *e, size_t v);

/**
 * The embedding in the CLI's JSON format. Null on error; free with
 * [`fibdim_string_free`].
 *
 * # Safety
 * `e` must be a live embedding handle.
 */
char *fibdim_embedding_to_json(const struct FibdimEmbedding *e);

/**
 * # Safety
 * `e` must come from this library and not be freed twice. Null is a no-op.
 */
void fibdim_embedding_free(struct FibdimEmbedding *e);

/**
 * # Safety
 * `s` must be a string returned by this library, or null.
 */
void fibdim_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIBDIM_H */
