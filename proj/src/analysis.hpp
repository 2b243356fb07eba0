#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divisors.hpp"

namespace fano_toric {

// The tuple (A, pi, alpha, k). Classes are given by T-invariant representatives.
struct AnalysisInput {
  const FaceLattice* lattice = nullptr;
  CayleyStructure structure;
  std::vector<ToricDivisor> classes;
  int k = 1;
};

// Throws PreconditionError unless k <= length and every class is effective and non-trivial.
void validate_input(const AnalysisInput& in);

// C(k + delta, k), zero for delta < 0.
Int sym_rank(int k, int delta);

std::vector<int> restriction_degrees(const AnalysisInput& in);
// dim tau - l + (k+1)(l-k) - sum_i C(k+delta_i, k).
int expected_dimension(int face_dim, int length, int k, const std::vector<int>& deltas);
int expected_dimension(const AnalysisInput& in);

// Degrees of O(D_F) on L_sigma for F containing sigma, grouped by where F sits.
struct NormalBundleDegrees {
  std::vector<int> new_facets;   // F in F_sigma \ F_sigma'
  std::vector<int> fiber_facets; // F in F_sigma' \ F_tau
  std::vector<int> tau_facets;   // F in F_tau

  std::vector<int> all() const;
  // (l-k) ones, (dim tau - l) zeros, (m - dim tau) negatives.
  bool matches_shape(int length, int k, int face_dim, int dim) const;
};

NormalBundleDegrees normal_bundle_degrees(const FaceLattice& lattice, const CayleyStructure& p,
                                          const IndexSet& sigma_prime, const IndexSet& sigma);

// The structure of length dim(sigma) on a simplex face sigma (one point per fiber).
CayleyStructure simplex_structure(const FaceLattice& lattice, const IndexSet& sigma);

enum class Verdict { holds, fails, not_checkable };
const char* to_string(Verdict v);

struct Condition {
  std::string id;         // "1".."7", or "cor-bpf"
  std::string statement;
  Verdict verdict = Verdict::not_checkable;
  std::string witness;    // failing datum, or the chain found for (3)
};

enum class HypothesisMode { theorem, corollary, both };

struct HypothesisOptions {
  HypothesisMode mode = HypothesisMode::both;
  unsigned threads = 1;
  // All structures of the configuration, for (dagger-dagger). Enumerated when empty.
  std::vector<CayleyStructure> structures;
  std::size_t max_nodes = 0;
};

struct HypothesisReport {
  std::optional<std::vector<int>> deltas;
  std::optional<int> phi;
  int component_dim = 0;
  std::vector<Condition> theorem;    // (1)..(7)
  std::vector<Condition> corollary;  // smoothness, bpf, (4), (6), (7)
  Verdict theorem_holds = Verdict::not_checkable;
  Verdict corollary_holds = Verdict::not_checkable;
  Verdict ddagger = Verdict::not_checkable;
  std::string verdict;  // derived statement for sufficiently general X
  bool countable = false;  // non-empty and of dimension 0 for general X
};

HypothesisReport check_hypotheses(const AnalysisInput& in, const HypothesisOptions& options = {});

// For every j the semigroup generated by pi^{-1}(e_j) - v_j is the same, v the
// first l-dimensional pi-face. Checked by mutual membership of generators.
bool semigroups_independent_of_fiber(const FaceLattice& lattice, const CayleyStructure& p);
// weight must be positive on every non-zero generator.
bool in_semigroup(const std::vector<IntVector>& generators, const IntVector& x, const IntVector& weight);

}  // namespace fano_toric
