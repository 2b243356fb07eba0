#include "polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cone.hpp"
#include "errors.hpp"
#include "face_lattice.hpp"

namespace fano_toric {

LatticePolytope LatticePolytope::convex_hull(std::vector<LatticePoint> points) {
  LatticePolytope p;
  if (points.empty()) return p;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  p.rank_ = points.front().size();
  PointConfiguration config(points);
  FaceLattice lattice(config);
  for (auto v : lattice.vertices()) p.vertices_.push_back(config[v]);
  std::sort(p.vertices_.begin(), p.vertices_.end());
  return p;
}

int LatticePolytope::dim() const {
  if (vertices_.empty()) return -1;
  IntMatrix diffs;
  for (std::size_t i = 1; i < vertices_.size(); ++i) diffs.push_back(subtract(vertices_[i], vertices_[0]));
  return static_cast<int>(rank(diffs));
}

LatticePolytope LatticePolytope::translated(const IntVector& shift) const {
  LatticePolytope p = *this;
  for (auto& v : p.vertices_) v = add(v, shift);
  return p;
}

LatticePolytope LatticePolytope::dilated(Int factor) const {
  if (factor == 0 && !empty()) return convex_hull({LatticePoint(rank_, 0)});
  LatticePolytope p = *this;
  for (auto& v : p.vertices_) v = scale(v, factor);
  std::sort(p.vertices_.begin(), p.vertices_.end());
  return p;
}

LatticePolytope operator+(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.empty() || q.empty()) return {};
  if (p.rank_ != q.rank_) throw PreconditionError("Minkowski sum of polytopes in different lattices");
  std::vector<LatticePoint> sums;
  sums.reserve(p.vertices_.size() * q.vertices_.size());
  for (const auto& a : p.vertices_)
    for (const auto& b : q.vertices_) sums.push_back(add(a, b));
  return LatticePolytope::convex_hull(std::move(sums));
}

namespace {

using Simplex = std::vector<std::size_t>;

// Pulling triangulation of a face, by recursion over its facets.
const std::vector<Simplex>& triangulate(const FaceLattice& lattice, std::size_t face,
                                        std::map<std::size_t, std::vector<Simplex>>& memo) {
  auto it = memo.find(face);
  if (it != memo.end()) return it->second;
  const auto& f = lattice.faces()[face];
  std::vector<Simplex> out;
  if (f.dim == 0) {
    out.push_back({f.members.first()});
  } else {
    const auto apex = lattice.configuration().lex_first(f.members);
    for (auto h : lattice.subfaces(f.members, f.dim - 1)) {
      if (lattice.faces()[h].members.contains(apex)) continue;
      for (const auto& s : triangulate(lattice, h, memo)) {
        Simplex t = s;
        t.push_back(apex);
        out.push_back(std::move(t));
      }
    }
  }
  return memo.emplace(face, std::move(out)).first->second;
}

}  // namespace

mpz_class normalized_volume(const LatticePolytope& p) {
  if (p.empty() || p.dim() < static_cast<int>(p.ambient_rank())) return 0;
  if (p.ambient_rank() == 0) return 1;
  PointConfiguration config(p.vertices());
  FaceLattice lattice(config);
  std::map<std::size_t, std::vector<Simplex>> memo;
  const auto full = *lattice.find_face(config.all());
  mpz_class total = 0;
  for (const auto& s : triangulate(lattice, full, memo)) {
    IntMatrix diffs;
    for (std::size_t i = 1; i < s.size(); ++i) diffs.push_back(subtract(config[s[i]], config[s[0]]));
    total += abs(determinant(diffs));
  }
  return total;
}

mpz_class normalized_mixed_volume(const std::vector<LatticePolytope>& polytopes) {
  const std::size_t d = polytopes.size();
  for (const auto& p : polytopes) {
    if (p.empty()) throw PreconditionError("mixed volume of an empty polytope");
    if (p.ambient_rank() != d)
      throw PreconditionError("mixed volume needs " + std::to_string(p.ambient_rank()) + " polytopes, got " +
                              std::to_string(d));
  }
  if (d == 0) return 1;
  mpz_class total = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
    LatticePolytope sum = LatticePolytope::convex_hull({LatticePoint(d, 0)});
    std::size_t count = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (mask & (std::size_t{1} << j)) {
        sum = sum + polytopes[j];
        ++count;
      }
    mpz_class v = normalized_volume(sum);
    if ((d - count) % 2) total -= v;
    else total += v;
  }
  mpz_class factorial = 1;
  for (std::size_t i = 2; i <= d; ++i) factorial *= static_cast<unsigned long>(i);
  if (total % factorial != 0) throw InternalError("mixed volume is not integral");
  return total / factorial;
}

std::vector<std::vector<mpq_class>> polyhedron_vertices(const IntMatrix& normals, const IntVector& offsets) {
  if (normals.empty()) throw PreconditionError("polyhedron without inequalities is unbounded");
  const std::size_t d = normals.front().size();
  IntMatrix rows;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    IntVector r = normals[i];
    r.push_back(-offsets[i]);
    rows.push_back(std::move(r));
  }
  IntVector t(d + 1, 0);
  t[d] = 1;
  rows.push_back(std::move(t));
  if (rank(rows) != d + 1) throw PreconditionError("polyhedron is unbounded");
  Cone cone = cone_from_constraints(std::move(rows));
  std::vector<std::vector<mpq_class>> vertices;
  bool recession = false;
  for (const auto& ray : cone.rays) {
    if (ray[d] == 0) {
      recession = true;
      continue;
    }
    std::vector<mpq_class> v(d);
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = mpq_class(static_cast<long>(ray[i]), static_cast<long>(ray[d]));
      v[i].canonicalize();
    }
    vertices.push_back(std::move(v));
  }
  if (recession && !vertices.empty()) throw PreconditionError("polyhedron is unbounded");
  return vertices;
}

std::vector<LatticePoint> lattice_points(const IntMatrix& normals, const IntVector& offsets) {
  auto vertices = polyhedron_vertices(normals, offsets);
  std::vector<LatticePoint> out;
  if (vertices.empty()) return out;
  const std::size_t d = normals.front().size();
  IntVector lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    mpq_class mn = vertices[0][i], mx = vertices[0][i];
    for (const auto& v : vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    mpz_class f, c;
    mpz_cdiv_q(c.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_fdiv_q(f.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[i] = to_int(c);
    hi[i] = to_int(f);
    if (lo[i] > hi[i]) return out;
  }
  IntVector x = lo;
  while (true) {
    bool inside = true;
    for (std::size_t r = 0; r < normals.size() && inside; ++r)
      if (dot(normals[r], x) < offsets[r]) inside = false;
    if (inside) out.push_back(x);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      if (i == 0) return out;
    }
    if (d == 0) return out;
  }
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& p) {
  if (p.empty()) return {};
  const std::size_t d = p.ambient_rank();
  if (p.dim() != static_cast<int>(d)) throw PreconditionError("lattice points of a lower-dimensional polytope");
  if (d == 0) return p.vertices();
  IntMatrix rows;
  for (const auto& v : p.vertices()) {
    IntVector r = v;
    r.push_back(1);
    rows.push_back(std::move(r));
  }
  Cone cone = cone_from_constraints(std::move(rows));
  IntMatrix normals;
  IntVector offsets;
  for (const auto& ray : cone.rays) {
    IntVector n(ray.begin(), ray.end() - 1);
    if (is_zero(n)) continue;
    normals.push_back(std::move(n));
    offsets.push_back(-ray.back());
  }
  return lattice_points(normals, offsets);
}

}  // namespace fano_toric
