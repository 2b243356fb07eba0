#include "face_lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cone.hpp"
#include "errors.hpp"

namespace fano_toric {

namespace {

bool check_smooth(const FaceLattice& lattice) {
  const auto& pts = lattice.configuration();
  const auto d = static_cast<std::size_t>(lattice.dim());
  if (d != pts.ambient_rank()) return false;
  std::set<LatticePoint> members(pts.points().begin(), pts.points().end());
  for (auto v : lattice.vertices()) {
    auto dirs = lattice.edge_directions(v);
    if (dirs.size() != d) return false;
    if (abs(determinant(dirs)) != 1) return false;
    for (const auto& e : dirs)
      if (!members.count(add(pts[v], e))) return false;
  }
  return true;
}

}  // namespace

FaceLattice::FaceLattice(const PointConfiguration& a, std::size_t max_faces)
    : config_(a), normalized_(normalize_configuration(a)) {
  const auto& pts = normalized_.configuration;
  dim_ = static_cast<int>(pts.ambient_rank());
  const std::size_t n = pts.size();

  if (dim_ > 0) {
    IntMatrix rows;
    rows.reserve(n);
    for (const auto& p : pts.points()) {
      IntVector r = p;
      r.push_back(1);
      rows.push_back(std::move(r));
    }
    Cone cone = cone_from_constraints(std::move(rows));
    for (std::size_t r = 0; r < cone.rays.size(); ++r) {
      IntVector normal(cone.rays[r].begin(), cone.rays[r].end() - 1);
      if (is_zero(normal)) continue;
      Int g = gcd_of(normal);
      Int offset = -cone.rays[r].back();
      for (auto& x : normal) x /= g;
      offset /= g;
      facets_.push_back({cone.tight_set(r), std::move(normal), offset});
    }
    std::sort(facets_.begin(), facets_.end(),
              [&](const Facet& x, const Facet& y) { return config_.lex_less(x.members, y.members); });
  }

  std::set<IndexSet> seen;
  std::deque<IndexSet> queue;
  auto visit = [&](IndexSet s) {
    if (s.empty() || !seen.insert(s).second) return;
    if (max_faces && seen.size() > max_faces)
      throw BudgetExceeded("face enumeration exceeded budget of " + std::to_string(max_faces) + " faces");
    queue.push_back(std::move(s));
  };
  visit(IndexSet::full(n));
  for (const auto& f : facets_) visit(f.members);
  while (!queue.empty()) {
    IndexSet g = std::move(queue.front());
    queue.pop_front();
    for (const auto& f : facets_) visit(g & f.members);
  }

  for (const auto& s : seen) {
    Face face;
    face.members = s;
    face.dim = affine_dimension(pts, s);
    if (s.size() != n) {
      IntVector normal(static_cast<std::size_t>(dim_), 0);
      for (const auto& f : facets_)
        if (s.is_subset_of(f.members)) normal = add(normal, f.normal);
      face.supporting_normal = std::move(normal);
    }
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(),
            [&](const Face& x, const Face& y) { return config_.lex_less(x.members, y.members); });
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    index_.emplace(faces_[i].members, i);
    if (faces_[i].members.size() == n) full_index_ = i;
    if (faces_[i].dim == 0) vertices_.push_back(faces_[i].members.first());
  }
  std::sort(vertices_.begin(), vertices_.end(),
            [&](std::size_t x, std::size_t y) { return config_.lex_rank(x) < config_.lex_rank(y); });
  smooth_ = check_smooth(*this);
}

std::optional<std::size_t> FaceLattice::find_face(const IndexSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FaceLattice::facets_containing(const IndexSet& members) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (members.is_subset_of(facets_[i].members)) out.push_back(i);
  return out;
}

std::vector<std::size_t> FaceLattice::subfaces(const IndexSet& members, int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == d && faces_[i].members.is_subset_of(members)) out.push_back(i);
  return out;
}

std::vector<IntVector> FaceLattice::edge_directions(std::size_t vertex) const {
  const auto& pts = config_;
  std::vector<IntVector> out;
  for (const auto& f : faces_) {
    if (f.dim != 1 || !f.members.contains(vertex)) continue;
    for (auto i : f.members.elements())
      if (i != vertex) {
        out.push_back(make_primitive(subtract(pts[i], pts[vertex])));
        break;
      }
  }
  return out;
}

std::vector<Face> faces(const PointConfiguration& a) { return FaceLattice(a).faces(); }

std::vector<Face> facets_containing(const PointConfiguration& a, const Face& sigma) {
  FaceLattice lattice(a);
  std::vector<Face> out;
  for (auto i : lattice.facets_containing(sigma.members)) {
    const auto& f = lattice.facets()[i];
    out.push_back({f.members, lattice.dim() - 1, f.normal});
  }
  return out;
}

bool is_smooth(const FaceLattice& lattice) { return lattice.smooth(); }

bool is_smooth(const PointConfiguration& a) { return is_smooth(FaceLattice(a)); }

}  // namespace fano_toric
