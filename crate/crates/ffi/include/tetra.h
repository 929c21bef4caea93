/* C interface to the tetra loop-algebra toolkit. */

#ifndef TETRA_H
#define TETRA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum TetraStatus {
  /**
   * Success.
   */
  TETRA_STATUS_OK = 0,
  /**
   * A verification suite ran and found failing checks.
   */
  TETRA_STATUS_VERIFY_FAILED = 1,
  /**
   * The input could not be parsed or evaluated.
   */
  TETRA_STATUS_PARSE_ERROR = 2,
  /**
   * A bad argument (unknown context, suite, or option).
   */
  TETRA_STATUS_INVALID_ARGUMENT = 3,
  /**
   * A required pointer was NULL.
   */
  TETRA_STATUS_NULL_POINTER = 4,
} TetraStatus;

/**
 * Evaluation context selector.
 */
typedef enum TetraContext {
  TETRA_CONTEXT_LOOP = 0,
  TETRA_CONTEXT_ONSAGER = 1,
  TETRA_CONTEXT_EXTENSION = 2,
} TetraContext;

/**
 * Opaque session handle; owns cached state and the last error message.
 */
typedef struct TetraSession TetraSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a session. Free it with [`tetra_session_free`].
 */
struct TetraSession *tetra_session_new(void);

/**
 * Releases a session created by [`tetra_session_new`].
 *
 * # Safety
 * `session` must be a pointer returned by [`tetra_session_new`] that has not
 * been freed yet, or NULL.
 */
void tetra_session_free(struct TetraSession *session);

/**
 * The message of the most recent failure on this session. The pointer stays
 * valid until the next call on the same session.
 *
 * # Safety
 * `session` must be a live session pointer.
 */
const char *tetra_last_error(const struct TetraSession *session);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be a pointer previously returned in an out-parameter of this
 * library and not yet freed, or NULL.
 */
void tetra_string_free(char *s);

/**
 * Evaluates an expression to its canonical text form.
 *
 * # Safety
 * `session` must be a live session pointer; `expr` must be a NUL-terminated
 * string; `out` must be a valid location to store a string pointer.
 */
enum TetraStatus tetra_eval(struct TetraSession *session,
                            const char *expr,
                            enum TetraContext context,
                            char **out);

/**
 * Applies a permutation, given in cycle notation, to an element.
 *
 * # Safety
 * As for [`tetra_eval`]; `perm` must also be a NUL-terminated string.
 */
enum TetraStatus tetra_act(struct TetraSession *session,
                           const char *perm,
                           const char *expr,
                           enum TetraContext context,
                           char **out);

/**
 * Splits an element by `"grading"`, `"omega"`, or a ring element by
 * `"kbasis"`, one `name\tvalue` record per line.
 *
 * # Safety
 * As for [`tetra_eval`]; `by` must be a NUL-terminated string.
 */
enum TetraStatus tetra_decompose(struct TetraSession *session,
                                 const char *expr,
                                 const char *by,
                                 char **out);

/**
 * Membership of a loop-algebra element in the ideal generated by a ring
 * element; writes 1 or 0 into `out_member`.
 *
 * # Safety
 * As for [`tetra_eval`]; `generator` must be a NUL-terminated string and
 * `out_member` a valid bool location.
 */
enum TetraStatus tetra_ideal_member(struct TetraSession *session,
                                    const char *expr,
                                    const char *generator,
                                    bool *out_member);

/**
 * Membership of an Onsager element in the ideal described by a spec string
 * such as `"J=t^2+1; typeII eta=1"`.
 *
 * # Safety
 * As for [`tetra_ideal_member`].
 */
enum TetraStatus tetra_onsager_ideal_member(struct TetraSession *session,
                                            const char *expr,
                                            const char *spec,
                                            bool *out_member);

/**
 * Runs a verification suite (`"tet"`, `"z"`, `"phi"`, `"s4"`, `"onsager"`,
 * `"nlrta"`, `"extension"` or `"all"`) and returns its report text. The
 * status is `Ok` when every check passes and `VerifyFailed` otherwise.
 *
 * # Safety
 * As for [`tetra_eval`]; `suite` must be a NUL-terminated string.
 */
enum TetraStatus tetra_verify(struct TetraSession *session, const char *suite, char **out_report);

/**
 * The closed-ideal census over a content ideal generator, one row per ideal
 * plus a summary line.
 *
 * # Safety
 * As for [`tetra_eval`]; `j` must be a NUL-terminated string.
 */
enum TetraStatus tetra_census_closed_ideals(struct TetraSession *session,
                                            const char *j,
                                            char **out);

/**
 * The fitted lift table: one line per lifted generator, one per charge.
 *
 * # Safety
 * As for [`tetra_eval`].
 */
enum TetraStatus tetra_lift_table(struct TetraSession *session, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TETRA_H */
