/* C interface to the Painleve I asymptotics toolkit.
 *
 * Every computation is addressed by a subcommand name and a JSON
 * parameter object; the result is a JSON or CSV document (see the
 * README for the schema).  All functions are thread-compatible: no
 * global state is shared between calls.
 */
#ifndef PI1_H
#define PI1_H

#ifdef __cplusplus
extern "C" {
#endif

/* status codes */
#define PI1_OK 0            /* success */
#define PI1_ERR_COMPUTE 1   /* computation failed or selftest reported failures */
#define PI1_ERR_USAGE 2     /* unknown command, bad parameter, malformed JSON */

typedef struct pi1_result pi1_result;

/* Runs `command` with the JSON object `params_json` (NULL or "" means
 * all defaults).  On return *out holds a result handle that must be
 * released with pi1_result_free; the handle is valid even on failure
 * and then carries the diagnostic message.  The return value equals
 * pi1_result_status(*out). */
int pi1_run(const char* command, const char* params_json, pi1_result** out);

/* PI1_OK / PI1_ERR_COMPUTE / PI1_ERR_USAGE */
int pi1_result_status(const pi1_result* r);

/* The rendered document; empty string on failure.  Owned by the handle. */
const char* pi1_result_output(const pi1_result* r);

/* Diagnostic message; empty string on success.  Owned by the handle. */
const char* pi1_result_message(const pi1_result* r);

void pi1_result_free(pi1_result* r);

/* Library version, e.g. "1.0.0". */
const char* pi1_version(void);

#ifdef __cplusplus
}
#endif

#endif /* PI1_H */
