#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"

namespace fano_toric {

// A_pi: all fiber sums u_0 + ... + u_l, re-embedded so its differences generate Z^d.
// Its toric variety is Z_pi.
struct CayleySumConfiguration {
  PointConfiguration points;     // normalized
  AffineLatticeMap map;          // sums in M -> normalized coordinates
  CayleyStructure source;
};

CayleySumConfiguration cayley_sum_configuration(const FaceLattice& lattice, const CayleyStructure& p);

// E = (+) L_i^*, with L_i generated by the characters G_i = pi^{-1}(e_i) - v_i.
struct SplitBundle {
  std::vector<std::size_t> pi_face;              // v_0..v_l, point indices of A
  std::vector<std::vector<IntVector>> generators;  // G_i in normalized M_pi coordinates
  std::vector<ToricDivisor> divisors;            // nef D_i on Z_pi with P_{D_i} = conv G_i
};

// `face_choice` selects among the l-dimensional pi-faces in canonical order.
SplitBundle universal_bundle(const FaceLattice& lattice, const CayleyStructure& p, const CayleySumConfiguration& z,
                             const FaceLattice& z_lattice, std::size_t face_choice = 0);

// D_1 ... D_d on a smooth projective toric variety, d = dim Z.
Int toric_intersection_number(const FaceLattice& z_lattice, const std::vector<ToricDivisor>& classes);

struct CountOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::size_t max_fixed_points = 0;  // 0 = unlimited
  std::size_t face_choice = 0;       // which pi-face fixes the linearization
};

// Integral over Gr(k+1, E) of prod_i c_top(Sym^{delta_i} S^*), by torus localization.
mpz_class count_k_planes(const FaceLattice& lattice, const CayleyStructure& p, int k, const std::vector<int>& deltas,
                         const CountOptions& options = {});

// The same integral on the Grassmannian Gr(k+1, n+1), by Schur expansion.
mpz_class schubert_oracle(int n_plus_1, int k, const std::vector<int>& deltas);

struct ComponentCount {
  CayleyStructure structure;
  HypothesisReport hypotheses;
  std::optional<mpz_class> count;
  std::string note;  // why no count was produced
};

struct FullCount {
  std::vector<ComponentCount> components;
  mpz_class total;
  bool complete = true;  // every component has a count
};

struct FullCountOptions {
  unsigned threads = 1;
  std::size_t max_nodes = 0;
  std::size_t max_fixed_points = 0;
  std::uint64_t seed = 1;
};

// Every maximal structure of length >= k: degrees, phi, hypotheses, and the count
// where the component is certified zero-dimensional.
FullCount full_count(const FaceLattice& lattice, const std::vector<ToricDivisor>& classes, int k,
                     const FullCountOptions& options = {});

}  // namespace fano_toric
