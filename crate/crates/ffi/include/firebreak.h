/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef FIREBREAK_H
#define FIREBREAK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum FbStatus {
  FB_STATUS_OK = 0,
  FB_STATUS_NULL_POINTER = 1,
  FB_STATUS_INVALID_UTF8 = 2,
  FB_STATUS_INVALID_ARGUMENT = 3,
  FB_STATUS_INVALID_GRAPH = 4,
  FB_STATUS_PARSE = 5,
  FB_STATUS_UNKNOWN = 6,
  FB_STATUS_PRECONDITION = 7,
  FB_STATUS_STRATEGY_FAULT = 8,
  FB_STATUS_SIZE_LIMIT = 9,
  FB_STATUS_IO = 10,
  FB_STATUS_PANIC = 11,
} FbStatus;

/**
 * An undirected graph.
 */
typedef struct FbGraph FbGraph;

/**
 * An orientation of a graph.
 */
typedef struct FbOrientation FbOrientation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread. Valid until the
 * next failing call on the same thread; never null.
 */
const char *fb_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library, freed once.
 */
void fb_string_free(char *s);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2m` endpoints.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or may be null when
 * `m == 0`); `out` must be writable.
 */
enum FbStatus fb_graph_new(size_t n, const size_t *edges, size_t m, struct FbGraph **out);

/**
 * Generates a member of a named family. Negative size parameters mean
 * "not given".
 *
 * # Safety
 * `family` must be a NUL-terminated string; `out` must be writable.
 */
enum FbStatus fb_graph_generate(const char *family,
                                int64_t n,
                                int64_t p,
                                int64_t q,
                                int64_t k,
                                int64_t w,
                                int64_t h,
                                uint64_t seed,
                                struct FbGraph **out);

/**
 * Parses a graph in the text or JSON format.
 *
 * # Safety
 * `input` must be a NUL-terminated string; `out` must be writable.
 */
enum FbStatus fb_graph_parse(const char *input, struct FbGraph **out);

/**
 * # Safety
 * `g` must be null or a live handle, freed once.
 */
void fb_graph_free(struct FbGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t fb_graph_n(const struct FbGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t fb_graph_m(const struct FbGraph *g);

/**
 * Orients `g` with a named recipe. `k` (negative for "infer") is used by
 * the k-tree recipe; `w` and `h` by the grid recipes.
 *
 * # Safety
 * `g` must be a live handle, `recipe` a NUL-terminated string and `out`
 * writable.
 */
enum FbStatus fb_orient(const struct FbGraph *g,
                        const char *recipe,
                        int64_t k,
                        int64_t w,
                        int64_t h,
                        struct FbOrientation **out);

/**
 * Parses an orientation (text, JSON, or a solver result).
 *
 * # Safety
 * `input` must be a NUL-terminated string; `out` must be writable.
 */
enum FbStatus fb_orientation_parse(const char *input, struct FbOrientation **out);

/**
 * # Safety
 * `o` must be null or a live handle, freed once.
 */
void fb_orientation_free(struct FbOrientation *o);

/**
 * Largest outdegree, or 0 for a null handle.
 *
 * # Safety
 * `o` must be null or a live handle.
 */
size_t fb_orientation_max_outdegree(const struct FbOrientation *o);

/**
 * The orientation as JSON.
 *
 * # Safety
 * `o` must be a live handle; `out_json` must be writable.
 */
enum FbStatus fb_orientation_to_json(const struct FbOrientation *o, char **out_json);

/**
 * Optimal play on one orientation. `start < 0` takes the worst start;
 * `budget_ms == 0` means no limit. Writes the burned count and, if
 * `out_json` is not null, the full result.
 *
 * # Safety
 * `o` must be a live handle; `out_beta` writable; `out_json` null or
 * writable.
 */
enum FbStatus fb_solve(const struct FbOrientation *o,
                       size_t f,
                       int64_t start,
                       uint64_t budget_ms,
                       size_t *out_beta,
                       char **out_json);

/**
 * Best orientation of a small graph. `threads == 0` uses all cores.
 *
 * # Safety
 * `g` must be a live handle; `out_beta` writable; `out_json` null or
 * writable.
 */
enum FbStatus fb_solve_best(const struct FbGraph *g,
                            size_t f,
                            uint64_t budget_ms,
                            size_t threads,
                            size_t *out_beta,
                            bool *out_exact,
                            char **out_json);

/**
 * Plays the game with a named defence strategy and writes the trace.
 *
 * # Safety
 * `o` must be a live handle, `strategy` a NUL-terminated string;
 * `out_burned` writable; `out_json` null or writable.
 */
enum FbStatus fb_simulate(const struct FbOrientation *o,
                          size_t start,
                          size_t f,
                          const char *strategy,
                          size_t *out_burned,
                          char **out_json);

/**
 * Graph bounds as a JSON array of entries.
 *
 * # Safety
 * `g` must be a live handle; `out_json` writable.
 */
enum FbStatus fb_bounds(const struct FbGraph *g, size_t f, char **out_json);

/**
 * Whether a connected graph has at most one cycle, the exact condition
 * for one firefighter to hold every fire to its start.
 *
 * # Safety
 * `g` must be a live handle; `out` writable.
 */
enum FbStatus fb_classify_b1(const struct FbGraph *g, bool *out);

/**
 * Runs a verification suite by name.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `out_passed` writable;
 * `out_json` null or writable.
 */
enum FbStatus fb_verify(const char *suite,
                        bool slow,
                        uint64_t seed,
                        bool *out_passed,
                        char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIREBREAK_H */
