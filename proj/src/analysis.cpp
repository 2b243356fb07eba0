#include "analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "errors.hpp"
#include "parallel.hpp"

namespace fano_toric {

void validate_input(const AnalysisInput& in) {
  if (!in.lattice) throw PreconditionError("analysis input has no configuration");
  if (in.k < 0) throw PreconditionError("k must be non-negative");
  if (in.k > in.structure.length())
    throw PreconditionError("k = " + std::to_string(in.k) + " exceeds the length " +
                            std::to_string(in.structure.length()) + " of the Cayley structure");
  for (std::size_t i = 0; i < in.classes.size(); ++i) {
    const auto name = "class " + std::to_string(i + 1);
    if (in.classes[i].coeffs.size() != in.lattice->facets().size())
      throw PreconditionError(name + " has the wrong number of facet coefficients");
    if (is_trivial_class(*in.lattice, in.classes[i])) throw PreconditionError(name + " is trivial");
    if (!is_effective(*in.lattice, in.classes[i])) throw PreconditionError(name + " is not effective");
  }
}

Int sym_rank(int k, int delta) {
  if (delta < 0) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k + delta), static_cast<unsigned long>(k));
  return to_int(c);
}

std::vector<int> restriction_degrees(const AnalysisInput& in) {
  std::vector<int> deltas;
  for (const auto& d : in.classes) deltas.push_back(restriction(PreparedDivisor(*in.lattice, d), in.structure).delta);
  return deltas;
}

int expected_dimension(int face_dim, int length, int k, const std::vector<int>& deltas) {
  Int phi = face_dim - length + Int{k + 1} * (length - k);
  for (int d : deltas) phi = checked_sub(phi, sym_rank(k, d));
  return static_cast<int>(phi);
}

int expected_dimension(const AnalysisInput& in) {
  validate_input(in);
  return expected_dimension(in.structure.face_dim, in.structure.length(), in.k, restriction_degrees(in));
}

std::vector<int> NormalBundleDegrees::all() const {
  std::vector<int> out = new_facets;
  out.insert(out.end(), fiber_facets.begin(), fiber_facets.end());
  out.insert(out.end(), tau_facets.begin(), tau_facets.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool NormalBundleDegrees::matches_shape(int length, int k, int face_dim, int dim) const {
  auto count = [](const std::vector<int>& v, auto pred) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), pred));
  };
  return static_cast<int>(new_facets.size()) == length - k &&
         count(new_facets, [](int s) { return s == 1; }) == length - k &&
         static_cast<int>(fiber_facets.size()) == face_dim - length &&
         count(fiber_facets, [](int s) { return s == 0; }) == face_dim - length &&
         static_cast<int>(tau_facets.size()) == dim - face_dim &&
         count(tau_facets, [](int s) { return s < 0; }) == dim - face_dim;
}

CayleyStructure simplex_structure(const FaceLattice& lattice, const IndexSet& sigma) {
  std::vector<IndexSet> fibers;
  for (auto v : sigma.elements()) fibers.push_back(IndexSet(sigma.universe(), {v}));
  return make_cayley_structure(lattice, sigma, std::move(fibers));
}

NormalBundleDegrees normal_bundle_degrees(const FaceLattice& lattice, const CayleyStructure& p,
                                          const IndexSet& sigma_prime, const IndexSet& sigma) {
  if (!lattice.smooth()) throw NotSmoothError("normal bundle degrees need a smooth configuration");
  auto outer = lattice.find_face(sigma_prime);
  auto inner = lattice.find_face(sigma);
  if (!outer || !inner || !sigma.is_subset_of(sigma_prime))
    throw PreconditionError("sigma must be a face of sigma'");
  if (lattice.faces()[*inner].dim < 1) throw PreconditionError("sigma must have dimension at least 1");
  auto candidates = pi_faces(lattice, p, p.length());
  if (std::find(candidates.begin(), candidates.end(), *outer) == candidates.end())
    throw PreconditionError("sigma' is not an l-dimensional pi-face");
  const auto s = simplex_structure(lattice, sigma);
  NormalBundleDegrees out;
  for (auto f : lattice.facets_containing(sigma)) {
    const auto& members = lattice.facets()[f].members;
    const int deg = restriction(PreparedDivisor(lattice, facet_divisor(lattice, f)), s).delta;
    if (!sigma_prime.is_subset_of(members))
      out.new_facets.push_back(deg);
    else if (!p.face.is_subset_of(members))
      out.fiber_facets.push_back(deg);
    else
      out.tau_facets.push_back(deg);
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_checkable: return "not-checkable";
  }
  return "not-checkable";
}

namespace {

std::string members_text(const PointConfiguration& a, const IndexSet& s) {
  std::string out = "{";
  for (auto v : a.sorted_members(s)) out += (out.size() > 1 ? " " : "") + format_vector(a[v]);
  return out + "}";
}

std::string facet_name(const FaceLattice& lattice, std::size_t f) {
  return "D_F (normal " + format_vector(lattice.facets()[f].normal) + ")";
}

Verdict combine(const std::vector<Condition>& conditions) {
  bool unknown = false;
  for (const auto& c : conditions) {
    if (c.verdict == Verdict::fails) return Verdict::fails;
    if (c.verdict == Verdict::not_checkable) unknown = true;
  }
  return unknown ? Verdict::not_checkable : Verdict::holds;
}

Condition make(std::string id, std::string statement, Verdict v, std::string witness = {}) {
  return {std::move(id), std::move(statement), v, std::move(witness)};
}

Verdict from_bool(bool b) { return b ? Verdict::holds : Verdict::fails; }

Condition lemma_condition(const std::vector<int>& deltas, int length, int k) {
  const auto big = std::count_if(deltas.begin(), deltas.end(), [](int d) { return d >= 3; });
  const auto two = std::count_if(deltas.begin(), deltas.end(), [](int d) { return d >= 2; });
  const auto ones = std::count_if(deltas.begin(), deltas.end(), [](int d) { return d == 1; });
  const bool ok = big > 0 || two >= 2 || length - 2 * k - ones >= 0;
  return make("7", "some delta_i >= 3, or two delta_i >= 2, or l - 2k - #{delta_i = 1} >= 0", from_bool(ok),
              ok ? "" : "l - 2k - #{delta_i = 1} = " + std::to_string(length - 2 * k - ones));
}

struct Chain {
  std::size_t outer, inner;  // indices into lattice.faces()
};

}  // namespace

HypothesisReport check_hypotheses(const AnalysisInput& in, const HypothesisOptions& options) {
  validate_input(in);
  const auto& lattice = *in.lattice;
  const auto& a = lattice.configuration();
  const auto& p = in.structure;
  const int k = in.k, length = p.length(), r = static_cast<int>(in.classes.size());
  const bool smooth = lattice.smooth();
  const bool want_theorem = options.mode != HypothesisMode::corollary;
  const bool want_corollary = options.mode != HypothesisMode::theorem;

  HypothesisReport report;
  report.component_dim = component_dimension(p, k);
  std::vector<PreparedDivisor> prepared;
  if (smooth) {
    for (const auto& d : in.classes) prepared.emplace_back(lattice, d);
    std::vector<int> deltas;
    for (const auto& d : prepared) deltas.push_back(restriction(d, p).delta);
    report.phi = expected_dimension(p.face_dim, length, k, deltas);
    report.deltas = std::move(deltas);
  }

  const auto smooth_condition =
      make("1", "Y_A is nonsingular", from_bool(smooth), smooth ? "" : "configuration is not smooth");
  auto phi_condition = make("4", "phi >= 0", Verdict::not_checkable);
  auto delta_condition = make("5", "delta_i >= 0 for all i", Verdict::not_checkable);
  const int slack = p.face_dim - 2 * k - r;
  const auto dim_condition = make("6", "dim tau - 2k - r >= 0", from_bool(slack >= 0),
                                  slack >= 0 ? "" : "dim tau - 2k - r = " + std::to_string(slack));
  auto lemma = make("7", "some delta_i >= 3, or two delta_i >= 2, or l - 2k - #{delta_i = 1} >= 0",
                    Verdict::not_checkable);
  if (report.phi) {
    phi_condition.verdict = from_bool(*report.phi >= 0);
    phi_condition.witness = "phi = " + std::to_string(*report.phi);
    const auto& deltas = *report.deltas;
    auto neg = std::find_if(deltas.begin(), deltas.end(), [](int d) { return d < 0; });
    delta_condition.verdict = from_bool(neg == deltas.end());
    if (neg != deltas.end())
      delta_condition.witness = "delta_" + std::to_string(neg - deltas.begin() + 1) + " = " + std::to_string(*neg);
    lemma = lemma_condition(deltas, length, k);
  }
  if (phi_condition.verdict == Verdict::holds) phi_condition.witness.clear();

  if (want_theorem) {
    auto ddagger = make("2", "(dagger-dagger): every alpha_i restricts surjectively for every q <= pi of length >= k",
                        Verdict::not_checkable);
    auto chain = make("3",
                      "some l-dim pi-face sigma' with k-dim face sigma has alpha_i - [D_F] restricting "
                      "surjectively w.r.t. sigma for all F in F_sigma \\ F_sigma'",
                      Verdict::not_checkable);
    if (smooth) {
      std::vector<CayleyStructure> enumerated;
      const auto* all = &options.structures;
      if (all->empty()) {
        enumerated = enumerate_cayley_structures(lattice, {1, options.max_nodes, options.threads});
        all = &enumerated;
      }
      auto result = satisfies_ddagger(prepared, p, k, *all, options.threads);
      ddagger.verdict = from_bool(result.holds);
      if (!result.holds)
        ddagger.witness = "alpha_" + std::to_string(*result.class_index + 1) + " on " + describe(a, *result.structure);
      report.ddagger = ddagger.verdict;

      std::vector<Chain> chains;
      for (auto outer : pi_faces(lattice, p, length))
        for (auto inner : lattice.subfaces(lattice.faces()[outer].members, k)) chains.push_back({outer, inner});
      // alpha_i - D_F for every class and facet, sections computed on demand
      std::vector<std::vector<PreparedDivisor>> shifted(in.classes.size());
      for (std::size_t i = 0; i < in.classes.size(); ++i)
        for (std::size_t f = 0; f < lattice.facets().size(); ++f)
          shifted[i].emplace_back(lattice, in.classes[i] - facet_divisor(lattice, f));
      auto works = [&](const Chain& c) {
        const auto& outer = lattice.faces()[c.outer].members;
        const auto& inner = lattice.faces()[c.inner].members;
        const auto s = simplex_structure(lattice, inner);
        for (auto f : lattice.facets_containing(inner)) {
          if (outer.is_subset_of(lattice.facets()[f].members)) continue;
          for (auto& row : shifted)
            if (!restricts_surjectively(row[f], s)) return false;
        }
        return true;
      };
      // batches keep the first witness in canonical order while running in parallel
      const std::size_t batch = std::max<std::size_t>(1, options.threads) * 4;
      std::optional<Chain> found;
      for (std::size_t start = 0; start < chains.size() && !found; start += batch) {
        const auto n = std::min(batch, chains.size() - start);
        std::vector<char> ok(n, 0);
        parallel_for(n, options.threads, [&](std::size_t j) { ok[j] = works(chains[start + j]) ? 1 : 0; });
        for (std::size_t j = 0; j < n && !found; ++j)
          if (ok[j]) found = chains[start + j];
      }
      chain.verdict = from_bool(found.has_value());
      chain.witness = found ? "sigma' = " + members_text(a, lattice.faces()[found->outer].members) +
                                  ", sigma = " + members_text(a, lattice.faces()[found->inner].members)
                            : "no pi-face chain works (" + std::to_string(chains.size()) + " tried)";
    }
    report.theorem = {smooth_condition, ddagger, chain, phi_condition, delta_condition, dim_condition, lemma};
    report.theorem_holds = combine(report.theorem);
  }

  if (want_corollary) {
    auto bpf = make("cor-bpf", "alpha_i and alpha_i - [P] are basepoint free for every T-invariant prime P",
                    Verdict::not_checkable);
    if (smooth) {
      bpf.verdict = Verdict::holds;
      for (std::size_t i = 0; i < in.classes.size() && bpf.verdict == Verdict::holds; ++i) {
        const auto name = "alpha_" + std::to_string(i + 1);
        if (!is_basepoint_free(lattice, in.classes[i])) {
          bpf.verdict = Verdict::fails;
          bpf.witness = name + " is not basepoint free";
          break;
        }
        for (std::size_t f = 0; f < lattice.facets().size(); ++f)
          if (!is_basepoint_free(lattice, in.classes[i] - facet_divisor(lattice, f))) {
            bpf.verdict = Verdict::fails;
            bpf.witness = name + " - " + facet_name(lattice, f) + " is not basepoint free";
            break;
          }
      }
    }
    report.corollary = {smooth_condition, bpf, phi_condition, dim_condition, lemma};
    report.corollary_holds = combine(report.corollary);
    // basepoint free classes satisfy (dagger-dagger)
    if (report.ddagger == Verdict::not_checkable && bpf.verdict == Verdict::holds) report.ddagger = Verdict::holds;
  }

  const bool certified = report.theorem_holds == Verdict::holds || report.corollary_holds == Verdict::holds;
  if (!report.phi) {
    report.verdict = "not checkable: configuration is not smooth";
  } else {
    const auto phi = std::to_string(*report.phi);
    if (certified) {
      report.verdict = "non-empty, and smooth of dimension " + phi + " for general X";
      report.countable = *report.phi == 0;
    } else if (report.ddagger == Verdict::holds && *report.phi < 0) {
      report.verdict = "empty for general X";
    } else if (report.ddagger == Verdict::holds) {
      report.verdict = "dimension = " + phi + " for general X, conditional on non-emptiness";
    } else {
      report.verdict = "no conclusion; dimension at least " + phi + " if non-empty";
    }
  }
  return report;
}

bool in_semigroup(const std::vector<IntVector>& generators, const IntVector& x, const IntVector& weight) {
  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (is_zero(g)) continue;
    if (dot(weight, g) <= 0) throw PreconditionError("weight is not positive on the generators");
    gens.push_back(g);
  }
  std::map<IntVector, bool> memo;
  std::function<bool(const IntVector&)> reach = [&](const IntVector& y) -> bool {
    if (is_zero(y)) return true;
    if (dot(weight, y) <= 0) return false;
    if (auto it = memo.find(y); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens)
      if (reach(subtract(y, g))) {
        ok = true;
        break;
      }
    memo.emplace(y, ok);
    return ok;
  };
  return reach(x);
}

bool semigroups_independent_of_fiber(const FaceLattice& lattice, const CayleyStructure& p) {
  if (!lattice.smooth()) throw NotSmoothError("semigroup comparison needs a smooth configuration");
  const auto& a = lattice.configuration();
  for (auto face : pi_faces(lattice, p, p.length())) {
    const auto& sigma = lattice.faces()[face].members;
    std::vector<std::vector<IntVector>> gens(p.fibers.size());
    std::vector<IntVector> weights(p.fibers.size());
    for (std::size_t j = 0; j < p.fibers.size(); ++j) {
      const auto v = (sigma & p.fibers[j]).first();
      for (auto w : p.fibers[j].elements()) gens[j].push_back(subtract(a[w], a[v]));
      // positive on pos(A - v) minus 0, since the vertex cone is pointed
      IntVector weight(a.ambient_rank(), 0);
      for (auto f : lattice.facets_containing(IndexSet(a.size(), {v})))
        weight = add(weight, lattice.facets()[f].normal);
      weights[j] = std::move(weight);
    }
    for (std::size_t j = 1; j < gens.size(); ++j) {
      for (const auto& g : gens[j])
        if (!in_semigroup(gens[0], g, weights[0])) return false;
      for (const auto& g : gens[0])
        if (!in_semigroup(gens[j], g, weights[j])) return false;
    }
  }
  return true;
}

}  // namespace fano_toric
