#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cayley.hpp"
#include "polytope.hpp"

namespace fano_toric {

// D = sum a_F D_F, coefficients indexed like FaceLattice::facets().
struct ToricDivisor {
  IntVector coeffs;

  friend ToricDivisor operator+(const ToricDivisor& x, const ToricDivisor& y) { return {add(x.coeffs, y.coeffs)}; }
  friend ToricDivisor operator-(const ToricDivisor& x, const ToricDivisor& y) {
    return {subtract(x.coeffs, y.coeffs)};
  }
  friend ToricDivisor operator*(Int s, const ToricDivisor& x) { return {scale(x.coeffs, s)}; }
  friend bool operator==(const ToricDivisor&, const ToricDivisor&) = default;
};

// Divisor class, stored by a canonical representative modulo principal divisors.
struct DivisorClass {
  ToricDivisor canonical;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

ToricDivisor facet_divisor(const FaceLattice& lattice, std::size_t facet);
ToricDivisor principal_divisor(const FaceLattice& lattice, const IntVector& u);
// The hyperplane class O(1) of the embedding given by A.
ToricDivisor embedding_divisor(const FaceLattice& lattice);
// Echelon basis of the principal divisors, as coefficient vectors.
IntMatrix principal_lattice(const FaceLattice& lattice);
DivisorClass divisor_class(const FaceLattice& lattice, const ToricDivisor& d);
bool is_trivial_class(const FaceLattice& lattice, const ToricDivisor& d);

// u_v for every vertex v, keyed by point index. Solves <nu_F, u_v> = -a_F over
// the facets containing v. Throws NotSmoothError unless the configuration is smooth.
using LocalData = std::map<std::size_t, IntVector>;
LocalData local_data(const FaceLattice& lattice, const ToricDivisor& d);

// Inequalities <nu_F, u> >= -a_F cutting out P_D.
std::pair<IntMatrix, IntVector> divisor_inequalities(const FaceLattice& lattice, const ToricDivisor& d);
LatticePolytope divisor_polytope(const FaceLattice& lattice, const ToricDivisor& d);
bool is_basepoint_free(const FaceLattice& lattice, const ToricDivisor& d);
// Some representative has all coefficients >= 0 (P_D contains a lattice point).
bool is_effective(const FaceLattice& lattice, const ToricDivisor& d);

// A divisor together with its local data and (lazily) its sections, P_D cap M.
class PreparedDivisor {
 public:
  PreparedDivisor(const FaceLattice& lattice, ToricDivisor d);

  const FaceLattice& lattice() const noexcept { return *lattice_; }
  const ToricDivisor& divisor() const noexcept { return divisor_; }
  const LocalData& local() const noexcept { return local_; }
  const std::vector<LatticePoint>& sections() const;
  bool basepoint_free() const;

 private:
  const FaceLattice* lattice_;
  ToricDivisor divisor_;
  LocalData local_;
  struct Cache {
    std::once_flag once;
    std::vector<LatticePoint> sections;
  };
  std::shared_ptr<Cache> cache_;
};

// Shift by the principal divisor that moves u_{v0} to 0, v0 the first vertex of tau.
// Afterwards u_v lies in M_tau for every vertex v of tau.
ToricDivisor make_dagger_representative(const FaceLattice& lattice, const ToricDivisor& d, const IndexSet& tau);

struct Restriction {
  int delta = 0;
  IntVector corner;  // pi'(u_{v_0}) for the dagger representative
};

Restriction restriction(const PreparedDivisor& d, const CayleyStructure& p);
int restriction_degree(const FaceLattice& lattice, const ToricDivisor& d, const CayleyStructure& p);

bool restricts_surjectively(const PreparedDivisor& d, const CayleyStructure& p);
bool restricts_surjectively(const FaceLattice& lattice, const ToricDivisor& d, const CayleyStructure& p);

struct DdaggerResult {
  bool holds = true;
  std::optional<std::size_t> class_index;
  std::optional<CayleyStructure> structure;
};

// (dagger-dagger): every class restricts surjectively with respect to every
// structure q <= p of length >= k, drawn from `structures` (all enumerated
// structures). p itself is checked first, then the rest in canonical order.
DdaggerResult satisfies_ddagger(const std::vector<PreparedDivisor>& classes, const CayleyStructure& p, int k,
                                const std::vector<CayleyStructure>& structures, unsigned threads = 1);

}  // namespace fano_toric
