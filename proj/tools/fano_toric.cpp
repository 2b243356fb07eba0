// fano-toric: command line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fano_toric/fano_toric.h"

namespace {

const char* const kTaskList[] = {"faces", "cayley", "smooth", "degrees", "expected-dim", "check", "count", "analyze"};

int report_error(ft_status status) {
  std::cerr << "fano-toric: " << ft_status_string(status) << "\n";
  std::istringstream lines(ft_last_error());
  for (std::string line; std::getline(lines, line);) std::cerr << "  " << line << "\n";
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fano schemes of k-planes on toric complete intersections"};
  std::string task, input, format = "text";
  int k = -1;
  ft_options options;
  ft_options_init(&options);
  std::uint64_t max_faces = options.max_faces, max_nodes = options.max_nodes, max_fixed = options.max_fixed_points;
  std::uint64_t seed = options.seed;
  unsigned threads = options.threads;

  std::vector<std::string> tasks(std::begin(kTaskList), std::end(kTaskList));
  app.add_option("task", task, "faces, cayley, smooth, degrees, expected-dim, check, count or analyze")
      ->required()
      ->check(CLI::IsMember(tasks));
  app.add_option("--input,-i", input, "problem file (JSON)")->required();
  app.add_option("--k", k, "dimension of the planes; overrides the problem file")->check(CLI::NonNegativeNumber);
  app.add_option("--budget-nodes", max_nodes, "Cayley structure search nodes")->capture_default_str();
  app.add_option("--budget-faces", max_faces, "faces of the configuration")->capture_default_str();
  app.add_option("--budget-fixed-points", max_fixed, "localization fixed points")->capture_default_str();
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", seed, "seed for the localization specialization")->capture_default_str();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.set_version_flag("--version", ft_version());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : FT_VALIDATION_ERROR;
  }

  std::string bytes;
  if (input == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    bytes = s.str();
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << "fano-toric: cannot read " << input << "\n";
      return FT_VALIDATION_ERROR;
    }
    std::ostringstream s;
    s << in.rdbuf();
    bytes = s.str();
  }

  ft_problem* problem = nullptr;
  if (auto status = ft_problem_parse(bytes.data(), bytes.size(), &problem); status != FT_OK) return report_error(status);

  options.task = task.c_str();
  options.k = k;
  options.threads = threads;
  options.max_faces = max_faces;
  options.max_nodes = max_nodes;
  options.max_fixed_points = max_fixed;
  options.seed = seed;

  ft_report* report = nullptr;
  const ft_status status = ft_run(problem, &options, &report);
  ft_problem_free(problem);
  if (!report) return report_error(status);
  std::cout << (format == "json" ? ft_report_json(report) : ft_report_text(report));
  std::cout.flush();
  ft_report_free(report);
  if (status != FT_OK) return report_error(status);
  return 0;
}
