#include "lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "errors.hpp"

namespace fano_toric {

PointConfiguration::PointConfiguration(std::vector<LatticePoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw ValidationError("empty configuration");
  ambient_rank_ = points_.front().size();
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].size() != ambient_rank_)
      problems.push_back("point " + std::to_string(i) + " has " + std::to_string(points_[i].size()) +
                         " coordinates, expected " + std::to_string(ambient_rank_));
  if (!problems.empty()) throw ValidationError(problems);

  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (points_[order[i]] == points_[order[i - 1]])
      problems.push_back("duplicate point " + format_vector(points_[order[i]]));
  if (!problems.empty()) throw ValidationError(problems);
  lex_rank_.resize(points_.size());
  for (std::size_t r = 0; r < order.size(); ++r) lex_rank_[order[r]] = r;
}

std::vector<std::size_t> PointConfiguration::sorted_members(const IndexSet& s) const {
  auto m = s.elements();
  std::sort(m.begin(), m.end(), [&](std::size_t a, std::size_t b) { return lex_rank_[a] < lex_rank_[b]; });
  return m;
}

bool PointConfiguration::lex_less(const IndexSet& a, const IndexSet& b) const {
  auto ma = sorted_members(a);
  auto mb = sorted_members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end(),
                                      [&](std::size_t x, std::size_t y) { return lex_rank_[x] < lex_rank_[y]; });
}

std::size_t PointConfiguration::lex_first(const IndexSet& s) const {
  std::size_t best = s.universe();
  for (auto i : s.elements())
    if (best == s.universe() || lex_rank_[i] < lex_rank_[best]) best = i;
  return best;
}

AffineLatticeMap::AffineLatticeMap(LatticePoint origin, IntMatrix basis)
    : origin_(std::move(origin)), basis_(std::move(basis)) {}

AffineLatticeMap AffineLatticeMap::identity(std::size_t rank) {
  IntMatrix basis(rank, IntVector(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) basis[i][i] = 1;
  return AffineLatticeMap(LatticePoint(rank, 0), std::move(basis));
}

std::optional<IntVector> AffineLatticeMap::try_apply_linear(const IntVector& direction) const {
  return lattice_coordinates(basis_, direction);
}

IntVector AffineLatticeMap::apply_linear(const IntVector& direction) const {
  auto c = try_apply_linear(direction);
  if (!c) throw PreconditionError("vector " + format_vector(direction) + " is not in the lattice of this map");
  return *c;
}

LatticePoint AffineLatticeMap::apply(const LatticePoint& u) const { return apply_linear(subtract(u, origin_)); }

IntVector AffineLatticeMap::lift_linear(const IntVector& coords) const {
  IntVector v(source_rank(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i) v = add(v, scale(basis_[i], coords[i]));
  return v;
}

LatticePoint AffineLatticeMap::lift(const IntVector& coords) const { return add(origin_, lift_linear(coords)); }

bool AffineLatticeMap::is_identity() const {
  if (source_rank() != target_rank() || !is_zero(origin_)) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_[i].size(); ++j)
      if (basis_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix difference_lattice_basis(const PointConfiguration& a, const IndexSet& members) {
  auto idx = members.elements();
  IntMatrix diffs;
  for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(subtract(a[idx[i]], a[idx[0]]));
  return hermite_row_basis(std::move(diffs));
}

int affine_dimension(const PointConfiguration& a, const IndexSet& members) {
  auto idx = members.elements();
  IntMatrix diffs;
  for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(subtract(a[idx[i]], a[idx[0]]));
  return static_cast<int>(rank(diffs));
}

bool is_normalized(const PointConfiguration& a) {
  auto basis = difference_lattice_basis(a, a.all());
  return basis.size() == a.ambient_rank() && AffineLatticeMap(LatticePoint(a.ambient_rank(), 0), basis).is_identity();
}

NormalizedConfiguration normalize_configuration(const PointConfiguration& a) {
  auto basis = difference_lattice_basis(a, a.all());
  if (basis.size() == a.ambient_rank() &&
      AffineLatticeMap(LatticePoint(a.ambient_rank(), 0), basis).is_identity())
    return {a, AffineLatticeMap::identity(a.ambient_rank())};
  AffineLatticeMap map(a[0], std::move(basis));
  std::vector<LatticePoint> pts;
  pts.reserve(a.size());
  for (const auto& p : a.points()) pts.push_back(map.apply(p));
  return {PointConfiguration(std::move(pts)), std::move(map)};
}

}  // namespace fano_toric
