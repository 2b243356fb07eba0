#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linalg.hpp"

namespace fano_toric {

extern const std::vector<std::string> kTasks;

// A divisor given either by facet coefficients or by the facet an inward normal
// supports. Resolved against the face lattice at run time.
struct DivisorSpec {
  enum class Kind { coefficients, normal };
  Kind kind = Kind::coefficients;
  IntVector values;
  friend bool operator==(const DivisorSpec&, const DivisorSpec&) = default;
};

// sum coefficient * basis[name], or a literal spec.
struct ClassSpec {
  std::string text;  // as written, for the report
  std::vector<std::pair<Int, std::string>> terms;
  std::optional<DivisorSpec> literal;
  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

struct ProblemFile {
  std::vector<IntVector> points;  // one entry per column of the input matrix
  std::vector<std::pair<std::string, DivisorSpec>> basis;
  std::vector<ClassSpec> classes;
  int k = 1;
  std::string task;  // empty when the file leaves it to the command line
  // Explicit structure, as fibers of point indices; the face is their union.
  std::optional<std::vector<std::vector<std::size_t>>> structure;
};

// Throws ValidationError listing every problem found.
ProblemFile parse_problem(std::string_view bytes);

// "8H - 3E" -> {(8, H), (-3, E)}. Throws ValidationError.
std::vector<std::pair<Int, std::string>> parse_class_expression(std::string_view text);

bool is_task(std::string_view task);

}  // namespace fano_toric
