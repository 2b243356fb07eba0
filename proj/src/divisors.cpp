#include "divisors.hpp"

#include <set>

#include "errors.hpp"
#include "parallel.hpp"

namespace fano_toric {

ToricDivisor facet_divisor(const FaceLattice& lattice, std::size_t facet) {
  ToricDivisor d{IntVector(lattice.facets().size(), 0)};
  d.coeffs.at(facet) = 1;
  return d;
}

ToricDivisor principal_divisor(const FaceLattice& lattice, const IntVector& u) {
  ToricDivisor d;
  for (const auto& f : lattice.facets()) d.coeffs.push_back(dot(f.normal, u));
  return d;
}

ToricDivisor embedding_divisor(const FaceLattice& lattice) {
  ToricDivisor d;
  for (const auto& f : lattice.facets()) d.coeffs.push_back(-f.offset);
  return d;
}

IntMatrix principal_lattice(const FaceLattice& lattice) {
  IntMatrix rows;
  for (int j = 0; j < lattice.dim(); ++j) {
    IntVector e(static_cast<std::size_t>(lattice.dim()), 0);
    e[static_cast<std::size_t>(j)] = 1;
    rows.push_back(principal_divisor(lattice, e).coeffs);
  }
  return hermite_row_basis(std::move(rows));
}

DivisorClass divisor_class(const FaceLattice& lattice, const ToricDivisor& d) {
  if (d.coeffs.size() != lattice.facets().size())
    throw PreconditionError("divisor has " + std::to_string(d.coeffs.size()) + " coefficients for " +
                            std::to_string(lattice.facets().size()) + " facets");
  return {{reduce_modulo(principal_lattice(lattice), d.coeffs)}};
}

bool is_trivial_class(const FaceLattice& lattice, const ToricDivisor& d) {
  return is_zero(divisor_class(lattice, d).canonical.coeffs);
}

LocalData local_data(const FaceLattice& lattice, const ToricDivisor& d) {
  if (!lattice.smooth()) throw NotSmoothError("Cartier data unavailable: configuration is not smooth");
  if (d.coeffs.size() != lattice.facets().size()) throw PreconditionError("divisor does not match the facets");
  LocalData out;
  const std::size_t n = lattice.configuration().size();
  for (auto v : lattice.vertices()) {
    IntMatrix normals, rhs;
    for (auto f : lattice.facets_containing(IndexSet(n, {v}))) {
      normals.push_back(lattice.facets()[f].normal);
      rhs.push_back({-d.coeffs[f]});
    }
    auto solution = solve_square(normals, rhs);
    if (!solution) throw InternalError("vertex cone is singular");
    IntVector u;
    for (const auto& row : *solution) {
      if (row[0].get_den() != 1) throw InternalError("local data is not integral");
      u.push_back(to_int(row[0].get_num()));
    }
    out.emplace(v, std::move(u));
  }
  return out;
}

std::pair<IntMatrix, IntVector> divisor_inequalities(const FaceLattice& lattice, const ToricDivisor& d) {
  IntMatrix normals;
  IntVector offsets;
  for (std::size_t f = 0; f < lattice.facets().size(); ++f) {
    normals.push_back(lattice.facets()[f].normal);
    offsets.push_back(-d.coeffs.at(f));
  }
  return {normals, offsets};
}

LatticePolytope divisor_polytope(const FaceLattice& lattice, const ToricDivisor& d) {
  std::vector<LatticePoint> pts;
  for (const auto& [v, u] : local_data(lattice, d)) pts.push_back(u);
  return LatticePolytope::convex_hull(std::move(pts));
}

namespace {

bool local_data_inside(const FaceLattice& lattice, const ToricDivisor& d, const LocalData& local) {
  for (const auto& [v, u] : local)
    for (std::size_t f = 0; f < lattice.facets().size(); ++f)
      if (dot(lattice.facets()[f].normal, u) < -d.coeffs[f]) return false;
  return true;
}

}  // namespace

bool is_basepoint_free(const FaceLattice& lattice, const ToricDivisor& d) {
  return local_data_inside(lattice, d, local_data(lattice, d));
}

bool is_effective(const FaceLattice& lattice, const ToricDivisor& d) {
  auto [normals, offsets] = divisor_inequalities(lattice, d);
  return !lattice_points(normals, offsets).empty();
}

PreparedDivisor::PreparedDivisor(const FaceLattice& lattice, ToricDivisor d)
    : lattice_(&lattice), divisor_(std::move(d)), local_(local_data(lattice, divisor_)),
      cache_(std::make_shared<Cache>()) {}

const std::vector<LatticePoint>& PreparedDivisor::sections() const {
  std::call_once(cache_->once, [&] {
    auto [normals, offsets] = divisor_inequalities(*lattice_, divisor_);
    cache_->sections = lattice_points(normals, offsets);
  });
  return cache_->sections;
}

bool PreparedDivisor::basepoint_free() const { return local_data_inside(*lattice_, divisor_, local_); }

namespace {

std::size_t first_vertex_in(const FaceLattice& lattice, const IndexSet& tau) {
  for (auto v : lattice.vertices())
    if (tau.contains(v)) return v;
  throw PreconditionError("face has no vertex");
}

struct RestrictionData {
  Restriction result;
  LatticeProjection projection;
  IntVector shift;  // u_{v0}; the dagger representative has local data u_v - shift
};

RestrictionData compute_restriction(const PreparedDivisor& d, const CayleyStructure& p) {
  const auto& lattice = d.lattice();
  RestrictionData out;
  out.shift = d.local().at(first_vertex_in(lattice, p.face));
  out.projection = induced_projection(lattice.configuration(), p);
  const auto width = p.fibers.size();
  std::vector<std::optional<IntVector>> corners(width);
  for (auto v : lattice.vertices()) {
    if (!p.face.contains(v)) continue;
    auto image = out.projection.apply(subtract(d.local().at(v), out.shift));
    if (!image) throw InternalError("dagger representative has local data outside M_tau");
    auto& slot = corners[static_cast<std::size_t>(p.fiber_of(v))];
    if (slot && *slot != *image) throw InternalError("not a valid Cayley restriction: fiber has two local equations");
    slot = std::move(*image);
  }
  for (const auto& c : corners)
    if (!c) throw InternalError("fiber without a vertex");
  const IntVector& w0 = *corners[0];
  const Int delta = width == 1 ? 0 : (*corners[1])[1] - w0[1];
  for (std::size_t i = 1; i < width; ++i) {
    IntVector expected(width, 0);
    expected[i] = delta;
    expected[0] = -delta;
    if (subtract(*corners[i], w0) != expected)
      throw InternalError("not a valid Cayley restriction: image is not a dilated standard simplex");
  }
  out.result.delta = static_cast<int>(delta);
  out.result.corner = w0;
  return out;
}

}  // namespace

ToricDivisor make_dagger_representative(const FaceLattice& lattice, const ToricDivisor& d, const IndexSet& tau) {
  auto local = local_data(lattice, d);
  const auto& shift = local.at(first_vertex_in(lattice, tau));
  ToricDivisor out = d + principal_divisor(lattice, shift);
  auto tau_basis = difference_lattice_basis(lattice.configuration(), tau);
  for (const auto& [v, u] : local)
    if (tau.contains(v) && !lattice_coordinates(tau_basis, subtract(u, shift)))
      throw InternalError("no representative satisfies the support condition");
  return out;
}

Restriction restriction(const PreparedDivisor& d, const CayleyStructure& p) { return compute_restriction(d, p).result; }

int restriction_degree(const FaceLattice& lattice, const ToricDivisor& d, const CayleyStructure& p) {
  return restriction(PreparedDivisor(lattice, d), p).delta;
}

bool restricts_surjectively(const PreparedDivisor& d, const CayleyStructure& p) {
  auto data = compute_restriction(d, p);
  const int delta = data.result.delta;
  if (delta < 0) return true;
  std::set<IntVector> image;
  for (const auto& u : d.sections()) {
    auto x = data.projection.apply(subtract(u, data.shift));
    if (x) image.insert(std::move(*x));
  }
  // lattice points corner + sum_i lambda_i (e_i - e_0), lambda >= 0, sum <= delta
  const std::size_t l = p.fibers.size() - 1;
  std::vector<int> lambda(l, 0);
  while (true) {
    IntVector point = data.result.corner;
    int used = 0;
    for (std::size_t i = 0; i < l; ++i) {
      point[i + 1] += lambda[i];
      point[0] -= lambda[i];
      used += lambda[i];
    }
    if (used <= delta && !image.count(point)) return false;
    std::size_t i = 0;
    while (i < l) {
      if (used < delta) {
        ++lambda[i];
        break;
      }
      used -= lambda[i];
      lambda[i] = 0;
      ++i;
    }
    if (i == l) return true;
  }
}

bool restricts_surjectively(const FaceLattice& lattice, const ToricDivisor& d, const CayleyStructure& p) {
  return restricts_surjectively(PreparedDivisor(lattice, d), p);
}

DdaggerResult satisfies_ddagger(const std::vector<PreparedDivisor>& classes, const CayleyStructure& p, int k,
                                const std::vector<CayleyStructure>& structures, unsigned threads) {
  std::vector<const CayleyStructure*> below{&p};
  for (const auto& q : structures)
    if (!(q == p) && q.length() >= k && leq(q, p)) below.push_back(&q);
  const std::size_t cells = below.size() * classes.size();
  std::vector<char> ok(cells, 1);
  parallel_for(cells, threads, [&](std::size_t c) {
    ok[c] = restricts_surjectively(classes[c % classes.size()], *below[c / classes.size()]) ? 1 : 0;
  });
  DdaggerResult result;
  for (std::size_t c = 0; c < cells; ++c)
    if (!ok[c]) {
      result.holds = false;
      result.class_index = c % classes.size();
      result.structure = *below[c / classes.size()];
      break;
    }
  return result;
}

}  // namespace fano_toric
