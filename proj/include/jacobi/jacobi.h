#ifndef JACOBI_JACOBI_H
#define JACOBI_JACOBI_H

/* C interface to the diagram library. Every function returns a jd_status;
 * on failure jd_last_error() describes the problem. Strings handed out through
 * `char** out` belong to the caller and are released with jd_string_free. */

#include <stdint.h>

#if defined(_WIN32)
#define JD_API __declspec(dllexport)
#else
#define JD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define JD_VERSION "0.1.0"

typedef enum jd_status {
  JD_OK = 0,
  JD_INVALID_ARGUMENT = 1,
  JD_PARSE = 2,
  JD_DOMAIN = 3,
  JD_CAP = 4,
  JD_IO = 5,
  /* The call ran, but a check or certificate failed. Output is still set. */
  JD_VERIFY_FAILED = 6,
  JD_INTERNAL = 7
} jd_status;

typedef enum jd_format { JD_FORMAT_TEXT = 0, JD_FORMAT_STRUCTURED = 1 } jd_format;

typedef struct jd_session jd_session;

JD_API const char* jd_version(void);
JD_API const char* jd_status_name(jd_status s);

JD_API jd_status jd_session_new(jd_session** out);
JD_API void jd_session_free(jd_session* s);
/* Message of the last failed call on this session, "" after a success. */
JD_API const char* jd_last_error(const jd_session* s);

/* Negative degree: each command picks its default. */
JD_API jd_status jd_set_degree(jd_session* s, int degree);
JD_API jd_status jd_set_seed(jd_session* s, uint64_t seed);
JD_API jd_status jd_set_format(jd_session* s, jd_format f);
/* NULL or "" disables the disk cache. The directory is created on demand. */
JD_API jd_status jd_set_cache_dir(jd_session* s, const char* dir);
/* Upper end of the obligation parameter ranges. */
JD_API jd_status jd_set_max(jd_session* s, int max);

/* One line with version, seed, degree, format and cache directory. */
JD_API jd_status jd_header(jd_session* s, char** out);

/* method: "auto", "full" or "chord" (NULL means auto). */
JD_API jd_status jd_dim(jd_session* s, const char* support, int degree, const char* method, int* out);
/* Input: diagram blocks, each optionally preceded by "coeff: <q>". */
JD_API jd_status jd_reduce(jd_session* s, const char* text, char** out);
JD_API jd_status jd_chordify(jd_session* s, const char* text, char** out);

#define JD_VERIFY_SYMBOLIC 1u
/* suite: a suite name or "all". JD_VERIFY_FAILED when a check fails. */
JD_API jd_status jd_verify(jd_session* s, const char* suite, unsigned flags, char** out);
/* Number of suites and their names, for iteration. */
JD_API int jd_suite_count(void);
JD_API const char* jd_suite_name(int i);

/* kind: "d", "D" or "D2". */
JD_API jd_status jd_denom_bound(jd_session* s, const char* kind, int parameter, char** out);
/* obligation: an obligation id or "all". */
JD_API jd_status jd_denom_check(jd_session* s, const char* obligation, int mutate, char** out);

/* Generic symbolic A up to shifted degree N; zero_mask bit k sets A_{2k} = 0. */
JD_API jd_status jd_anomaly_invert_symbolic(jd_session* s, int N, uint32_t zero_mask, char** out);
/* A given as a two-leg combination (colors v1, v2) containing the strut. */
JD_API jd_status jd_anomaly_invert(jd_session* s, const char* text, int N, char** out);

JD_API jd_status jd_cache_stats(jd_session* s, char** out);
JD_API jd_status jd_cache_purge(jd_session* s, int* removed);

JD_API void jd_string_free(char* p);

#ifdef __cplusplus
}
#endif

#endif
