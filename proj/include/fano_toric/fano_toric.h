/* C interface to the fano_toric library.
 *
 * A problem is parsed from JSON text into an opaque handle, run into an opaque
 * report, and the report is rendered as JSON or as a text table. Strings
 * returned by the library are owned by the handle they came from and stay valid
 * until that handle is freed. Error text for the calling thread is available
 * from ft_last_error() after any call that did not return FT_OK.
 */
#ifndef FANO_TORIC_H
#define FANO_TORIC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FT_API __declspec(dllexport)
#else
#define FT_API __attribute__((visibility("default")))
#endif

/* Values double as process exit codes for the command line tool. */
typedef enum ft_status {
  FT_OK = 0,
  FT_INTERNAL_ERROR = 1,
  FT_VALIDATION_ERROR = 2,
  FT_HYPOTHESES_NOT_SATISFIED = 3, /* task count: some component has no certified count */
  FT_BUDGET_EXCEEDED = 4,
  FT_INVALID_ARGUMENT = 5          /* null handle or out-of-range option */
} ft_status;

typedef struct ft_problem ft_problem;
typedef struct ft_report ft_report;

typedef struct ft_options {
  const char* task;          /* NULL: use the problem file's task */
  int k;                     /* negative: use the problem file's k */
  unsigned threads;
  uint64_t max_faces;
  uint64_t max_nodes;        /* Cayley structure search nodes */
  uint64_t max_fixed_points; /* localization fixed points */
  uint64_t seed;
} ft_options;

FT_API const char* ft_version(void);
FT_API const char* ft_status_string(ft_status status);
/* Newline-separated list of every problem found by the last failing call. */
FT_API const char* ft_last_error(void);

FT_API void ft_options_init(ft_options* options);

FT_API ft_status ft_problem_parse(const char* bytes, size_t length, ft_problem** out);
FT_API void ft_problem_free(ft_problem* problem);

/* On FT_OK and FT_HYPOTHESES_NOT_SATISFIED *out holds a report; otherwise NULL. */
FT_API ft_status ft_run(const ft_problem* problem, const ft_options* options, ft_report** out);
FT_API void ft_report_free(ft_report* report);

FT_API const char* ft_report_json(ft_report* report);
FT_API const char* ft_report_text(ft_report* report);
/* Total count as a decimal string, or NULL when the task computed none. */
FT_API const char* ft_report_total(ft_report* report);
FT_API size_t ft_report_component_count(const ft_report* report);

#ifdef __cplusplus
}
#endif

#endif
