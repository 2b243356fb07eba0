#pragma once

#include <vector>

#include "lattice.hpp"

namespace fano_toric {

// Convex hull of finitely many lattice points, stored by its vertices in
// lexicographic order.
class LatticePolytope {
 public:
  LatticePolytope() = default;

  static LatticePolytope convex_hull(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  std::size_t ambient_rank() const noexcept { return rank_; }
  bool empty() const noexcept { return vertices_.empty(); }
  int dim() const;

  LatticePolytope translated(const IntVector& shift) const;
  LatticePolytope dilated(Int factor) const;

  friend LatticePolytope operator+(const LatticePolytope& p, const LatticePolytope& q);  // Minkowski sum
  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  std::vector<LatticePoint> vertices_;
  std::size_t rank_ = 0;
};

// d! times the euclidean volume in the ambient lattice Z^d; zero when not full-dimensional.
mpz_class normalized_volume(const LatticePolytope& p);

// Normalized mixed volume of d polytopes in Z^d: MV(D,...,D) = 1 for the unit simplex.
mpz_class normalized_mixed_volume(const std::vector<LatticePolytope>& polytopes);

// Lattice points of {x : normals[i] . x >= offsets[i]}, lexicographically sorted.
// Throws PreconditionError if the polyhedron is unbounded.
std::vector<LatticePoint> lattice_points(const IntMatrix& normals, const IntVector& offsets);

// Vertices of {x : normals[i] . x >= offsets[i]}; empty when infeasible over Q.
std::vector<std::vector<mpq_class>> polyhedron_vertices(const IntMatrix& normals, const IntVector& offsets);

// Lattice points of a full-dimensional polytope.
std::vector<LatticePoint> lattice_points(const LatticePolytope& p);

}  // namespace fano_toric
