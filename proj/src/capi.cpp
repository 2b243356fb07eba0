#include "fano_toric/fano_toric.h"

#include <new>
#include <string>

#include "errors.hpp"
#include "report.hpp"

struct ft_problem {
  fano_toric::ProblemFile problem;
};

struct ft_report {
  fano_toric::Report report;
  std::string json, text, total;
  bool has_json = false, has_text = false;
};

namespace {

thread_local std::string last_error;

ft_status fail(ft_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
ft_status guarded(F&& body) {
  try {
    return body();
  } catch (const fano_toric::ValidationError& e) {
    std::string joined;
    for (const auto& m : e.messages()) joined += (joined.empty() ? "" : "\n") + m;
    return fail(FT_VALIDATION_ERROR, joined);
  } catch (const fano_toric::PreconditionError& e) {
    return fail(FT_VALIDATION_ERROR, e.what());
  } catch (const fano_toric::BudgetExceeded& e) {
    return fail(FT_BUDGET_EXCEEDED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FT_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(FT_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(FT_INTERNAL_ERROR, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* ft_version(void) { return "1.0.0"; }

const char* ft_status_string(ft_status status) {
  switch (status) {
    case FT_OK: return "ok";
    case FT_INTERNAL_ERROR: return "internal error";
    case FT_VALIDATION_ERROR: return "validation error";
    case FT_HYPOTHESES_NOT_SATISFIED: return "hypotheses not satisfied";
    case FT_BUDGET_EXCEEDED: return "resource budget exceeded";
    case FT_INVALID_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

const char* ft_last_error(void) { return last_error.c_str(); }

void ft_options_init(ft_options* options) {
  if (!options) return;
  const fano_toric::RunOptions defaults;
  options->task = nullptr;
  options->k = -1;
  options->threads = defaults.threads;
  options->max_faces = defaults.max_faces;
  options->max_nodes = defaults.max_nodes;
  options->max_fixed_points = defaults.max_fixed_points;
  options->seed = defaults.seed;
}

ft_status ft_problem_parse(const char* bytes, size_t length, ft_problem** out) {
  if (!out || (!bytes && length)) return fail(FT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = new ft_problem{fano_toric::parse_problem(std::string_view(bytes ? bytes : "", length))};
    *out = handle;
    return FT_OK;
  });
}

void ft_problem_free(ft_problem* problem) { delete problem; }

ft_status ft_run(const ft_problem* problem, const ft_options* options, ft_report** out) {
  if (!problem || !out) return fail(FT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  fano_toric::RunOptions run_options;
  if (options) {
    if (options->task) run_options.task = options->task;
    if (options->k >= 0) run_options.k = options->k;
    if (options->threads == 0) return fail(FT_INVALID_ARGUMENT, "threads must be positive");
    run_options.threads = options->threads;
    run_options.max_faces = options->max_faces;
    run_options.max_nodes = options->max_nodes;
    run_options.max_fixed_points = options->max_fixed_points;
    run_options.seed = options->seed;
  }
  return guarded([&] {
    auto handle = new ft_report{fano_toric::run(problem->problem, run_options), {}, {}, {}, false, false};
    *out = handle;
    if (fano_toric::hypotheses_unsatisfied(handle->report))
      return fail(FT_HYPOTHESES_NOT_SATISFIED, "some component is not certified zero-dimensional; no count for it");
    return FT_OK;
  });
}

void ft_report_free(ft_report* report) { delete report; }

const char* ft_report_json(ft_report* report) {
  if (!report) return nullptr;
  if (!report->has_json) {
    report->json = fano_toric::to_json(report->report);
    report->has_json = true;
  }
  return report->json.c_str();
}

const char* ft_report_text(ft_report* report) {
  if (!report) return nullptr;
  if (!report->has_text) {
    report->text = fano_toric::to_text(report->report);
    report->has_text = true;
  }
  return report->text.c_str();
}

const char* ft_report_total(ft_report* report) {
  if (!report || !report->report.totals) return nullptr;
  report->total = report->report.totals->count;
  return report->total.c_str();
}

size_t ft_report_component_count(const ft_report* report) {
  if (!report || !report->report.components) return 0;
  return report->report.components->size();
}

}  // extern "C"
