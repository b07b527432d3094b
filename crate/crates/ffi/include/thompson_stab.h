#ifndef THOMPSON_STAB_H
#define THOMPSON_STAB_H

/* Generated by cbindgen from crates/ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of the C API.
 */
typedef enum FsStatus {
  FS_STATUS_OK = 0,
  FS_STATUS_NULL_POINTER = 1,
  FS_STATUS_INVALID_ARGUMENT = 2,
  FS_STATUS_PARSE = 3,
  FS_STATUS_DOMAIN = 4,
  FS_STATUS_INVALID_MAP = 5,
  FS_STATUS_CAPACITY = 6,
  FS_STATUS_NOT_FOUND = 7,
  FS_STATUS_INVALID_UTF8 = 8,
  FS_STATUS_PANIC = 9,
} FsStatus;

/**
 * A stabilizer generating set.
 */
typedef struct FsGens FsGens;

/**
 * An element of F as a PL map.
 */
typedef struct FsMap FsMap;

/**
 * A canonical rational point of the Cantor set.
 */
typedef struct FsPoint FsPoint;

/**
 * A word in `x0^{±1}`, `x1^{±1}`.
 */
typedef struct FsWord FsWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failed call on this thread, or NULL. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *fs_last_error_message(void);

/**
 * Static description of a status code.
 */
const char *fs_status_name(enum FsStatus status);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void fs_string_free(char *s);

/**
 * Parses `v(w)` or `p/q` into a canonical point.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum FsStatus fs_point_parse(const char *text, struct FsPoint **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library, not yet freed.
 */
void fs_point_free(struct FsPoint *p);

/**
 * Canonical `v(w)` text of a point; NULL if `p` is NULL.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
char *fs_point_to_string(const struct FsPoint *p);

/**
 * Exact value `p/q` of a point; NULL if `p` is NULL.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
char *fs_point_value(const struct FsPoint *p);

/**
 * # Safety
 * Both arguments must be NULL or live handles.
 */
bool fs_point_equal(const struct FsPoint *a, const struct FsPoint *b);

/**
 * Image of `p` under `w`.
 *
 * # Safety
 * `p`, `w` must be live handles; `out` must be writable.
 */
enum FsStatus fs_point_act(const struct FsPoint *p, const struct FsWord *w, struct FsPoint **out);

/**
 * Parses a word over `a, A, b, B` (`e` or empty for the identity).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum FsStatus fs_word_parse(const char *text, struct FsWord **out);

/**
 * # Safety
 * `w` must be NULL or a handle from this library, not yet freed.
 */
void fs_word_free(struct FsWord *w);

/**
 * # Safety
 * `w` must be NULL or a live handle.
 */
char *fs_word_to_string(const struct FsWord *w);

/**
 * # Safety
 * `w` must be NULL or a live handle.
 */
size_t fs_word_len(const struct FsWord *w);

/**
 * The PL map of a word.
 *
 * # Safety
 * `w` must be a live handle; `out` must be writable.
 */
enum FsStatus fs_word_to_map(const struct FsWord *w, struct FsMap **out);

/**
 * # Safety
 * `m` must be NULL or a handle from this library, not yet freed.
 */
void fs_map_free(struct FsMap *m);

/**
 * Breakpoints as `(t, f(t))` pairs of exact fractions.
 *
 * # Safety
 * `m` must be NULL or a live handle.
 */
char *fs_map_to_string(const struct FsMap *m);

/**
 * # Safety
 * Both arguments must be NULL or live handles.
 */
bool fs_map_equal(const struct FsMap *a, const struct FsMap *b);

/**
 * # Safety
 * `m` must be NULL or a live handle.
 */
bool fs_map_is_identity(const struct FsMap *m);

/**
 * The product `a * b` (first `a`, then `b`).
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum FsStatus fs_map_compose(const struct FsMap *a, const struct FsMap *b, struct FsMap **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum FsStatus fs_map_inverse(const struct FsMap *m, struct FsMap **out);

/**
 * The flip `t -> 1 - f(1 - t)`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum FsStatus fs_map_phi(const struct FsMap *m, struct FsMap **out);

/**
 * Evaluates `m` at a fraction `p/q` in `[0, 1]`, writing the exact result.
 *
 * # Safety
 * `m` must be a live handle, `t` a NUL-terminated string, `out` writable.
 */
enum FsStatus fs_map_eval(const struct FsMap *m, const char *t, char **out);

/**
 * DOT text of the ball of `radius` around `p`, failing with
 * `FS_STATUS_CAPACITY` beyond `cap` vertices.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum FsStatus fs_graph_dot(const struct FsPoint *p, size_t radius, size_t cap, char **out);

/**
 * JSON form of the same ball as [`fs_graph_dot`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum FsStatus fs_graph_json(const struct FsPoint *p, size_t radius, size_t cap, char **out);

/**
 * Shortest word moving `from` to `to`. A `max_radius` of 0 selects the
 * default `|v| + 4|w| + 8` of `from`.
 *
 * # Safety
 * `from`, `to` must be live handles; `out` must be writable.
 */
enum FsStatus fs_path_find(const struct FsPoint *from,
                           const struct FsPoint *to,
                           size_t max_radius,
                           struct FsWord **out);

/**
 * Generating set of the stabilizer of `p`. A `max_radius` of 0 selects the
 * default conjugator search radius.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum FsStatus fs_gens_compute(const struct FsPoint *p, size_t max_radius, struct FsGens **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library, not yet freed.
 */
void fs_gens_free(struct FsGens *g);

/**
 * Number of generators (5, or 2 for `0^∞` and `1^∞`); 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t fs_gens_count(const struct FsGens *g);

/**
 * Copy of generator `index`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum FsStatus fs_gens_generator(const struct FsGens *g, size_t index, struct FsWord **out);

/**
 * Copy of the conjugator `h`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum FsStatus fs_gens_conjugator(const struct FsGens *g, struct FsWord **out);

/**
 * Text form: header `# point=.. h=.. w=..` and one generator per line.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
char *fs_gens_to_text(const struct FsGens *g);

/**
 * Runs the stabilizer verification and the stabilizer relator checks,
 * setting `*passed`.
 *
 * # Safety
 * `g` must be a live handle; `passed` must be writable.
 */
enum FsStatus fs_gens_verify(const struct FsGens *g,
                             size_t samples,
                             size_t word_len,
                             uint64_t seed,
                             bool *passed);

/**
 * Runs the full self-test at relator depth `depth` (at least 2).
 *
 * # Safety
 * `passed` must be writable.
 */
enum FsStatus fs_selftest(uint32_t depth, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THOMPSON_STAB_H */
