#pragma once

#include <map>
#include <optional>
#include <vector>

#include "index_set.hpp"
#include "lattice.hpp"

namespace fano_toric {

// Facet as an inequality normal . u >= offset, tight exactly on `members`.
struct Facet {
  IndexSet members;
  IntVector normal;  // primitive, inward
  Int offset = 0;
};

struct Face {
  IndexSet members;
  int dim = 0;
  std::optional<IntVector> supporting_normal;  // minimized exactly on members; absent for the full face
};

// All non-empty faces of a configuration, sorted lexicographically by member
// coordinates. Computed on the normalized configuration; normals and offsets
// are expressed in normalized coordinates (the input's own coordinates when the
// input is already normalized).
class FaceLattice {
 public:
  explicit FaceLattice(const PointConfiguration& a, std::size_t max_faces = 0);

  const PointConfiguration& configuration() const noexcept { return config_; }
  const PointConfiguration& normalized() const noexcept { return normalized_.configuration; }
  const AffineLatticeMap& normalization() const noexcept { return normalized_.map; }
  int dim() const noexcept { return dim_; }
  bool smooth() const noexcept { return smooth_; }

  const std::vector<Face>& faces() const noexcept { return faces_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  // Vertex point indices, in lexicographic coordinate order.
  const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }

  std::optional<std::size_t> find_face(const IndexSet& members) const;
  bool is_face(const IndexSet& members) const { return find_face(members).has_value(); }
  const Face& full_face() const { return faces_[full_index_]; }

  // Indices into facets() of the facets containing the given member set.
  std::vector<std::size_t> facets_containing(const IndexSet& members) const;
  // Faces contained in `members` of dimension exactly d.
  std::vector<std::size_t> subfaces(const IndexSet& members, int d) const;
  // Primitive edge directions at a vertex, in input coordinates, one per edge.
  std::vector<IntVector> edge_directions(std::size_t vertex) const;

 private:
  PointConfiguration config_;
  NormalizedConfiguration normalized_;
  int dim_ = 0;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::vector<std::size_t> vertices_;
  std::map<IndexSet, std::size_t> index_;
  std::size_t full_index_ = 0;
  bool smooth_ = false;
};

std::vector<Face> faces(const PointConfiguration& a);
std::vector<Face> facets_containing(const PointConfiguration& a, const Face& sigma);

// Smoothness test in the ambient lattice of the input: A is full-dimensional and
// at every vertex v there are exactly dim A edges whose primitive directions
// form a basis of Z^m, with v plus each direction again in A. For normalized
// input this is smoothness of Y_A.
bool is_smooth(const FaceLattice& lattice);
bool is_smooth(const PointConfiguration& a);

}  // namespace fano_toric
