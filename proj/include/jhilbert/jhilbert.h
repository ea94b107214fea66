/* C interface to the jhilbert library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Strings returned through char** out-parameters
 * are allocated by the library and released with jh_string_free.
 */
#ifndef JHILBERT_H
#define JHILBERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(JH_BUILDING_LIBRARY)
#    define JH_API __declspec(dllexport)
#  else
#    define JH_API __declspec(dllimport)
#  endif
#else
#  define JH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes for the CLI. */
typedef enum jh_status {
  JH_OK = 0,
  JH_ERR_FAILURE = 1,
  JH_ERR_PARSE = 2,
  JH_ERR_HYPOTHESIS = 3,
  JH_ERR_NONSTABILIZED = 4,
  JH_ERR_CROSSCHECK = 5,
  JH_ERR_INVALID_ARGUMENT = 6,
  JH_ERR_OUT_OF_MEMORY = 7
} jh_status;

typedef enum jh_format { JH_FORMAT_JSON = 0, JH_FORMAT_TABLE = 1 } jh_format;

typedef enum jh_colon_reading { JH_COLON_X1 = 0, JH_COLON_XNEXT = 1 } jh_colon_reading;

typedef struct jh_problem jh_problem;
typedef struct jh_options jh_options;

/* Parses the line-oriented input language. A nonzero char_override replaces
 * the declared characteristic. On JH_ERR_PARSE, *error (if non-null) receives
 * a message naming the line and column. */
JH_API jh_status jh_problem_parse(const char* text, uint32_t char_override, jh_problem** out, char** error);
JH_API void jh_problem_free(jh_problem* problem);
/* Canonical text of a parsed problem. */
JH_API jh_status jh_problem_print(const jh_problem* problem, char** out);

JH_API jh_options* jh_options_new(void);
JH_API void jh_options_free(jh_options* options);
JH_API void jh_options_set_seed(jh_options* options, uint64_t seed);
/* 0 selects r_J(I) + d + 2. */
JH_API void jh_options_set_nmax(jh_options* options, uint32_t nmax);
JH_API jh_status jh_options_set_cap_m(jh_options* options, uint32_t cap_m);
/* Hilbert fit window; 0 selects d + 2. */
JH_API void jh_options_set_window(jh_options* options, uint32_t window);
JH_API void jh_options_set_assertions(jh_options* options, int gd, int an, int s2);
JH_API jh_status jh_options_set_colon_reading(jh_options* options, jh_colon_reading reading);
JH_API void jh_options_set_oracle(jh_options* options, int enabled);

/* Runs one of: hilbert, coeffs, jmult, reduction, depthcheck, omega,
 * northcott, oracle. *report receives the rendered report even when the
 * status is 3, 4 or 5. */
JH_API jh_status jh_run(const jh_problem* problem, const char* command, const jh_options* options,
                        jh_format format, char** report);

/* Number of commands and the name at an index; NULL past the end. */
JH_API size_t jh_command_count(void);
JH_API const char* jh_command_name(size_t index);

JH_API const char* jh_status_name(jh_status status);
JH_API const char* jh_version(void);
JH_API void jh_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* JHILBERT_H */
