/* qmv: exact computations in the quantum matrix algebra O_q(M_{m,n}).
 *
 * All results are returned as heap strings owned by the caller and released
 * with qmv_string_free. On any status other than QMV_OK / QMV_CHECK_FAILED
 * the output pointer is left NULL and qmv_last_error() describes the
 * problem (per thread).
 */
#ifndef QMV_QMV_H
#define QMV_QMV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QMV_API __declspec(dllexport)
#else
#define QMV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmv_status {
  QMV_OK = 0,
  QMV_CHECK_FAILED = 1,   /* computation ran; some identity or verdict failed */
  QMV_PARSE_ERROR = 2,    /* malformed expression; see qmv_error_position */
  QMV_USAGE_ERROR = 3,    /* bad argument, shape or index */
  QMV_UNSUPPORTED = 4,    /* unknown suite or family, or a request outside the engine */
  QMV_INTERNAL_ERROR = 5
} qmv_status;

typedef enum qmv_format { QMV_FORMAT_TEXT = 0, QMV_FORMAT_JSON = 1 } qmv_format;

typedef struct qmv_session qmv_session;

/* m or n may be 0: a missing dimension copies the other, both default to 3. */
QMV_API qmv_status qmv_session_create(int m, int n, qmv_session** out);
QMV_API void qmv_session_destroy(qmv_session* session);

/* t = 0 clears the minor size. */
QMV_API qmv_status qmv_session_set_t(qmv_session* session, int t);
QMV_API qmv_status qmv_session_set_seed(qmv_session* session, uint64_t seed);
QMV_API qmv_status qmv_session_set_format(qmv_session* session, qmv_format format);
/* Adds wall-clock timings to suite reports (off by default). */
QMV_API qmv_status qmv_session_set_timings(qmv_session* session, int enabled);

/* Canonical form of an expression. */
QMV_API qmv_status qmv_normalize(qmv_session* session, const char* expr, char** out);
/* QMV_OK when equal, QMV_CHECK_FAILED otherwise; the report carries the
 * canonical difference. */
QMV_API qmv_status qmv_equal(qmv_session* session, const char* lhs, const char* rhs, char** out);
/* Quantum determinant of the leading k x k block; k = 0 means min(m, n). */
QMV_API qmv_status qmv_det(qmv_session* session, int k, char** out);
/* [I|J], or the minor of X' when primed is nonzero. */
QMV_API qmv_status qmv_minor(qmv_session* session, const int* rows, size_t row_count, const int* cols,
                             size_t col_count, int primed, char** out);
/* QMV_CHECK_FAILED when any check of the suite fails. */
QMV_API qmv_status qmv_run_suite(qmv_session* session, const char* name, char** out);
/* Fits a family at the session size, or at its smallest size when the
 * session was created with m = n = 0. QMV_CHECK_FAILED unless the fit is
 * unique, exact, and equal to the frozen law. */
QMV_API qmv_status qmv_fit_exponents(qmv_session* session, const char* family, char** out);
/* c = d x + e and the membership verdict for the session's n x n shape. */
QMV_API qmv_status qmv_jordan(qmv_session* session, char** out);

/* Newline-separated names: what = "suites" or "families". */
QMV_API qmv_status qmv_list(const char* what, char** out);

QMV_API void qmv_string_free(char* s);
QMV_API const char* qmv_last_error(void);
/* Byte offset of the last parse error, or -1. */
QMV_API long qmv_error_position(void);
QMV_API const char* qmv_status_name(qmv_status status);

#ifdef __cplusplus
}
#endif

#endif /* QMV_QMV_H */
