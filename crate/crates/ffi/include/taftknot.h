/* C ABI for the taftknot braid-closure invariant engine.
 *
 * Link against the `taftknot_ffi` cdylib/staticlib. All functions are
 * thread-safe; error messages are per-thread. This header is maintained by
 * hand and must stay in sync with crates/ffi/src/lib.rs.
 */

#ifndef TAFTKNOT_H
#define TAFTKNOT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values are part of the ABI. */
typedef enum TkStatus {
  TK_OK = 0,
  TK_NULL_ARGUMENT = 1,
  TK_INVALID_UTF8 = 2,
  TK_PARSE_ERROR = 3,
  TK_EVAL_ERROR = 4,
  TK_VERIFY_FAILED = 5,
  TK_PANIC = 6,
} TkStatus;

/* Opaque handle to an evaluated invariant. */
typedef struct TkResult TkResult;

/* Message for the most recent error on this thread. Borrowed; valid until
 * the next failing call on the same thread. Never null. */
const char *tk_last_error_message(void);

/* Evaluates the closure of a braid word.
 *
 *   braid   - e.g. "B2: s1^-3" or "[-1, -1, -1]".
 *   n       - module index; 1 recovers the Jones normalization.
 *   mode    - "framed", "balanced", or "reduced".
 *   strands - strand count for bare index lists, or 0 to infer.
 *   out     - receives the handle on success.
 *
 * Returns TK_OK on success. The handle must be released with
 * tk_result_free. */
TkStatus tk_evaluate(const char *braid, uint32_t n, const char *mode,
                     size_t strands, TkResult **out);

/* The invariant as a human-readable Laurent polynomial in q.
 * Borrowed from the handle; valid until tk_result_free. */
const char *tk_result_value(const TkResult *res);

/* The full result (braid, writhe, components, coefficient list) as one
 * JSON object. Borrowed from the handle; valid until tk_result_free. */
const char *tk_result_json(const TkResult *res);

/* Writhe of the evaluated word (0 if res is null). */
int64_t tk_result_writhe(const TkResult *res);

/* Number of components of the closure (0 if res is null). */
size_t tk_result_components(const TkResult *res);

/* Number of braid strands used (0 if res is null). */
size_t tk_result_strands(const TkResult *res);

/* Releases a result handle. Null is a no-op. */
void tk_result_free(TkResult *res);

/* Releases a caller-owned string returned by this library. Null is a
 * no-op. */
void tk_string_free(char *s);

/* Runs a named verification suite: "hopf", "yd", "braid-eq", "ribbon",
 * "markov", "jones", or "all".
 *
 *   m          - root-of-unity order for specialized checks (odd, >= 3).
 *   n          - module index.
 *   seed/cases - randomized-suite parameters.
 *   out_report - if non-null, receives a caller-owned report string;
 *                release with tk_string_free.
 *
 * Returns TK_OK when every check passes, TK_VERIFY_FAILED when any check
 * fails, or an error code if the suite name or parameters are invalid. */
TkStatus tk_verify(const char *suite, uint32_t m, uint32_t n, uint64_t seed,
                   size_t cases, char **out_report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TAFTKNOT_H */
