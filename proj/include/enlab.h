/* enlab — E_n-homology toolkit, C API.
 *
 * The library computes E_n-homology and -cohomology of finite-dimensional
 * commutative nonunital algebras with coefficients in a symmetric bimodule,
 * and runs the toolkit's verification suites. All functionality is driven
 * through JSON requests; see README.md for the request schema.
 *
 * Every entry point is thread-compatible: results are independent objects
 * and may be used from different threads; enlab_last_error is thread-local.
 */
#ifndef ENLAB_H
#define ENLAB_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes, also used as CLI exit codes. */
#define ENLAB_OK 0
#define ENLAB_CHECK_FAILED 1   /* a verification suite reported failures */
#define ENLAB_INVALID_INPUT 2  /* malformed request, file or literal */
#define ENLAB_INTERNAL 3       /* internal consistency error (not a complex) */

typedef struct enlab_result enlab_result;

/* Executes one request (a JSON object, see README). On success *out_result
 * owns a result handle, to be freed with enlab_result_free. Returns the
 * status code (also stored in the result). Returns ENLAB_INVALID_INPUT and
 * sets *out_result to NULL only if the arguments themselves are NULL. */
int enlab_run(const char* request_json, enlab_result** out_result);

int enlab_result_status(const enlab_result* result);

/* Machine-readable report (JSON) and its human-readable rendering. The
 * returned strings are owned by the result and live until it is freed. */
const char* enlab_result_json(const enlab_result* result);
const char* enlab_result_text(const enlab_result* result);

void enlab_result_free(enlab_result* result);

/* Message for the most recent failure on this thread, or "". */
const char* enlab_last_error(void);

const char* enlab_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ENLAB_H */
