#pragma once

#include <cstddef>
#include <vector>

#include "index_set.hpp"
#include "linalg.hpp"

namespace fano_toric {

using LatticePoint = IntVector;

// Finite set of distinct lattice points in Z^m, in caller order. Index i always
// refers to the i-th point given at construction.
class PointConfiguration {
 public:
  PointConfiguration() = default;
  explicit PointConfiguration(std::vector<LatticePoint> points);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<LatticePoint>& points() const noexcept { return points_; }

  // Position of point i in the lexicographic order of all points.
  std::size_t lex_rank(std::size_t i) const { return lex_rank_[i]; }
  // Members ordered by coordinates.
  std::vector<std::size_t> sorted_members(const IndexSet& s) const;
  // Lexicographic comparison of two index sets by their sorted member coordinates.
  bool lex_less(const IndexSet& a, const IndexSet& b) const;
  // Member with lexicographically smallest coordinates.
  std::size_t lex_first(const IndexSet& s) const;

  IndexSet all() const { return IndexSet::full(size()); }

  friend bool operator==(const PointConfiguration& a, const PointConfiguration& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<LatticePoint> points_;
  std::size_t ambient_rank_ = 0;
  std::vector<std::size_t> lex_rank_;
};

// u -> coordinates of (u - origin) in a lattice basis (rows of `basis`, echelon form).
class AffineLatticeMap {
 public:
  AffineLatticeMap() = default;
  AffineLatticeMap(LatticePoint origin, IntMatrix basis);

  static AffineLatticeMap identity(std::size_t rank);

  std::size_t source_rank() const noexcept { return origin_.size(); }
  std::size_t target_rank() const noexcept { return basis_.size(); }
  const LatticePoint& origin() const noexcept { return origin_; }
  const IntMatrix& basis() const noexcept { return basis_; }

  LatticePoint apply(const LatticePoint& u) const;
  IntVector apply_linear(const IntVector& direction) const;
  std::optional<IntVector> try_apply_linear(const IntVector& direction) const;
  LatticePoint lift(const IntVector& coords) const;
  IntVector lift_linear(const IntVector& coords) const;
  bool is_identity() const;

 private:
  LatticePoint origin_;
  IntMatrix basis_;
};

struct NormalizedConfiguration {
  PointConfiguration configuration;
  AffineLatticeMap map;  // input coordinates -> normalized coordinates
};

// Re-embeds A into Z^d (d = rank of the difference lattice) so that differences of
// points generate Z^d. Point order is preserved. A configuration whose differences
// already generate its ambient lattice is returned unchanged with the identity map.
NormalizedConfiguration normalize_configuration(const PointConfiguration& a);

bool is_normalized(const PointConfiguration& a);

// Echelon basis of the lattice spanned by differences of the given members.
IntMatrix difference_lattice_basis(const PointConfiguration& a, const IndexSet& members);

// Dimension of the affine span of the members.
int affine_dimension(const PointConfiguration& a, const IndexSet& members);

}  // namespace fano_toric
