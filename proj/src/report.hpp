#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "problem.hpp"

namespace fano_toric {

struct RunOptions {
  std::optional<std::string> task;  // overrides the problem file
  std::optional<int> k;
  unsigned threads = 1;
  std::size_t max_faces = 1'000'000;
  std::size_t max_nodes = 10'000'000;
  std::size_t max_fixed_points = 10'000'000;
  std::uint64_t seed = 1;
};

struct FacetRecord {
  std::vector<std::size_t> members;
  IntVector normal;
  Int offset = 0;
  friend bool operator==(const FacetRecord&, const FacetRecord&) = default;
};

struct FaceRecord {
  std::vector<std::size_t> members;
  int dim = 0;
  friend bool operator==(const FaceRecord&, const FaceRecord&) = default;
};

struct ConfigurationRecord {
  std::size_t points = 0;
  std::size_t ambient_rank = 0;
  int dim = 0;
  bool normalized = true;  // differences of the input points generate Z^m
  bool smooth = false;
  std::vector<std::size_t> vertices;
  std::vector<FacetRecord> facets;  // normals in normalized coordinates
  friend bool operator==(const ConfigurationRecord&, const ConfigurationRecord&) = default;
};

struct ClassRecord {
  std::string expression;
  IntVector coefficients;  // one per facet
  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

struct ConditionRecord {
  std::string id;
  std::string statement;
  std::string verdict;  // holds, fails, not-checkable
  std::string witness;
  friend bool operator==(const ConditionRecord&, const ConditionRecord&) = default;
};

struct HypothesisRecord {
  std::string theorem;
  std::string corollary;
  std::string ddagger;
  std::vector<ConditionRecord> theorem_conditions;
  std::vector<ConditionRecord> corollary_conditions;
  std::string verdict;
  bool countable = false;
  friend bool operator==(const HypothesisRecord&, const HypothesisRecord&) = default;
};

struct ComponentRecord {
  std::vector<std::size_t> face;
  int face_dim = 0;
  int length = 0;
  std::vector<std::vector<std::size_t>> fibers;
  int component_dim = 0;  // dim Z_{pi,k}
  std::optional<std::vector<int>> deltas;
  std::optional<std::vector<bool>> surjective;
  std::optional<int> phi;
  std::optional<HypothesisRecord> hypotheses;
  std::optional<std::string> count;  // decimal; may exceed 64 bits
  std::string note;
  friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

struct Totals {
  std::string count;
  bool complete = true;
  friend bool operator==(const Totals&, const Totals&) = default;
};

struct Report {
  std::string task;
  int k = 1;
  ConfigurationRecord configuration;
  std::vector<ClassRecord> classes;
  std::optional<std::vector<FaceRecord>> faces;
  std::optional<std::vector<ComponentRecord>> components;
  std::optional<Totals> totals;
  std::vector<std::string> warnings;
  friend bool operator==(const Report&, const Report&) = default;
};

// Throws ValidationError, BudgetExceeded, InternalError.
Report run(const ProblemFile& problem, const RunOptions& options = {});

// task = count and some component has no certified count.
bool hypotheses_unsatisfied(const Report& report);

std::string to_json(const Report& report);
// Inverse of to_json. Throws ValidationError.
Report report_from_json(std::string_view text);
std::string to_text(const Report& report);

}  // namespace fano_toric
