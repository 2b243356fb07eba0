/* Exercises the C interface from C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "fano_toric/fano_toric.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static const char* cubic =
    "{\"points\": [[0,1,0,0],[0,0,1,0],[0,0,0,1]],"
    " \"basis\": {\"H\": {\"normal\": [-1,-1,-1]}}, \"classes\": [\"3H\"], \"k\": 1, \"task\": \"count\"}";

int main(void) {
  ft_problem* problem = NULL;
  ft_report* report = NULL;
  ft_options options;

  EXPECT(strlen(ft_version()) > 0);
  EXPECT(strcmp(ft_status_string(FT_BUDGET_EXCEEDED), "resource budget exceeded") == 0);

  EXPECT(ft_problem_parse(cubic, strlen(cubic), &problem) == FT_OK);
  EXPECT(problem != NULL);
  ft_options_init(&options);
  EXPECT(options.k < 0 && options.task == NULL && options.threads == 1);
  EXPECT(ft_run(problem, &options, &report) == FT_OK);
  EXPECT(report != NULL);
  if (report) {
    EXPECT(ft_report_total(report) && strcmp(ft_report_total(report), "27") == 0);
    EXPECT(ft_report_component_count(report) == 1);
    EXPECT(strstr(ft_report_json(report), "\"count\": \"27\"") != NULL);
    EXPECT(strstr(ft_report_text(report), "total: 27") != NULL);
    ft_report_free(report);
  }

  options.task = "faces";
  EXPECT(ft_run(problem, &options, &report) == FT_OK);
  EXPECT(ft_report_total(report) == NULL);
  ft_report_free(report);

  options.task = "bogus";
  EXPECT(ft_run(problem, &options, &report) == FT_VALIDATION_ERROR);
  EXPECT(report == NULL);
  EXPECT(strstr(ft_last_error(), "unknown task") != NULL);

  options.task = "count";
  options.max_fixed_points = 1;
  EXPECT(ft_run(problem, &options, &report) == FT_BUDGET_EXCEEDED);
  EXPECT(report == NULL);
  ft_problem_free(problem);

  problem = NULL;
  {
    const char* bad = "{\"points\": [[]], \"classes\": [\"Q\"]}";
    EXPECT(ft_problem_parse(bad, strlen(bad), &problem) == FT_VALIDATION_ERROR);
  }
  EXPECT(problem == NULL);
  EXPECT(strstr(ft_last_error(), "empty configuration") != NULL);
  EXPECT(strstr(ft_last_error(), "unknown class name") != NULL);

  EXPECT(ft_run(NULL, NULL, &report) == FT_INVALID_ARGUMENT);
  EXPECT(ft_problem_parse(NULL, 3, &problem) == FT_INVALID_ARGUMENT);
  ft_problem_free(NULL);
  ft_report_free(NULL);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return EXIT_FAILURE;
  }
  printf("C interface: all checks passed\n");
  return EXIT_SUCCESS;
}
