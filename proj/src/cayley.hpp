#pragma once

#include <vector>

#include "face_lattice.hpp"

namespace fano_toric {

// A Cayley structure pi: tau -> Delta_l, stored as its fibers. Canonical form:
// fibers ordered by their lexicographically smallest member, so fiber i is
// pi^{-1}(e_i).
struct CayleyStructure {
  IndexSet face;
  int face_dim = 0;
  std::vector<IndexSet> fibers;

  int length() const noexcept { return static_cast<int>(fibers.size()) - 1; }
  // Fiber index of a point, or -1 if the point is not in the face.
  int fiber_of(std::size_t point) const;
  // fiber_of for every point of the configuration.
  std::vector<int> assignment() const;

  friend bool operator==(const CayleyStructure& a, const CayleyStructure& b) {
    return a.face == b.face && a.fibers == b.fibers;
  }
};

struct CayleyOptions {
  int min_length = 1;
  std::size_t max_nodes = 0;  // exact-cover search nodes; 0 = unlimited
  unsigned threads = 1;
};

// Puts fibers into canonical order.
CayleyStructure make_cayley_structure(const FaceLattice& lattice, IndexSet face, std::vector<IndexSet> fibers);

// Checks the defining property directly: the assignment respects every integer
// affine relation among members of the face (tested on a spanning set).
bool preserves_affine_relations(const PointConfiguration& a, const CayleyStructure& p);

// All structures of length >= min_length on all faces, canonical order
// (faces lexicographically, then fiber lists lexicographically). Throws
// BudgetExceeded when the search exceeds max_nodes.
std::vector<CayleyStructure> enumerate_cayley_structures(const FaceLattice& lattice, const CayleyOptions& options);

// p <= q: tau_p is contained in tau_q and each fiber of q meets at most one fiber of p.
bool leq(const CayleyStructure& p, const CayleyStructure& q);

std::vector<CayleyStructure> maximal_cayley_structures(const FaceLattice& lattice, const CayleyOptions& options);

// Restriction of p to a face sigma of tau_p (fibers that miss sigma are dropped).
CayleyStructure restrict_structure(const FaceLattice& lattice, const CayleyStructure& p, const IndexSet& sigma);

// Indices into lattice.faces() of the k-dimensional faces of tau on which pi is injective.
std::vector<std::size_t> pi_faces(const FaceLattice& lattice, const CayleyStructure& p, int k);

int component_dimension(const CayleyStructure& p, int k);

// pi': M_tau -> M_l. M_tau has the echelon basis `tau_basis` (rows, ambient
// coordinates); row j of `matrix` is the image of basis vector j in Z^{l+1}.
struct LatticeProjection {
  IntMatrix tau_basis;
  IntMatrix matrix;
  std::size_t width = 0;  // l + 1

  // pi'(u) for u in M_tau, nullopt otherwise.
  std::optional<IntVector> apply(const IntVector& u) const;
};

LatticeProjection induced_projection(const PointConfiguration& a, const CayleyStructure& p);

std::string describe(const PointConfiguration& a, const CayleyStructure& p);

}  // namespace fano_toric
