#include "cone.hpp"

#include <numeric>

#include "errors.hpp"

namespace fano_toric {

IndexSet Cone::tight_set(std::size_t r) const {
  IndexSet s(constraints.size());
  for (std::size_t c = 0; c < constraints.size(); ++c)
    if (dot(constraints[c], rays[r]) == 0) s.insert(c);
  return s;
}

namespace {

IntVector integral_primitive(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_int(mpz_class(q * l)));
  return make_primitive(std::move(out));
}

struct WorkingRay {
  IntVector ray;
  IndexSet tight;  // over constraints processed so far
};

}  // namespace

Cone cone_from_constraints(IntMatrix constraints) {
  Cone cone;
  if (constraints.empty()) throw PreconditionError("cone has no constraints");
  const std::size_t dim = constraints.front().size();
  cone.ambient_rank = dim;
  const std::size_t m = constraints.size();
  auto basis_rows = independent_rows(constraints);
  if (basis_rows.size() != dim) throw PreconditionError("cone is not pointed");

  IntMatrix square;
  for (auto i : basis_rows) square.push_back(constraints[i]);
  IntMatrix identity(dim, IntVector(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) identity[i][i] = 1;
  auto inverse = solve_square(square, identity);
  if (!inverse) throw InternalError("singular initial cone");

  IndexSet done(m);
  for (auto i : basis_rows) done.insert(i);
  std::vector<WorkingRay> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<mpq_class> column(dim);
    for (std::size_t i = 0; i < dim; ++i) column[i] = (*inverse)[i][j];
    WorkingRay w{integral_primitive(column), IndexSet(m)};
    for (std::size_t t = 0; t < dim; ++t)
      if (t != j) w.tight.insert(basis_rows[t]);
    rays.push_back(std::move(w));
  }

  for (std::size_t c = 0; c < m; ++c) {
    if (done.contains(c)) continue;
    std::vector<Int> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(constraints[c], rays[r].ray);
      if (value[r] > 0) pos.push_back(r);
      if (value[r] < 0) neg.push_back(r);
    }
    std::vector<WorkingRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] < 0) continue;
      WorkingRay w = rays[r];
      if (value[r] == 0) w.tight.insert(c);
      next.push_back(std::move(w));
    }
    for (auto p : pos)
      for (auto n : neg) {
        IndexSet common = rays[p].tight & rays[n].tight;
        if (common.size() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != n && common.is_subset_of(rays[r].tight)) adjacent = false;
        if (!adjacent) continue;
        IntVector combined = subtract(scale(rays[n].ray, value[p]), scale(rays[p].ray, value[n]));
        common.insert(c);
        next.push_back({make_primitive(std::move(combined)), std::move(common)});
      }
    rays = std::move(next);
    done.insert(c);
  }

  cone.constraints = std::move(constraints);
  for (auto& w : rays) cone.rays.push_back(std::move(w.ray));
  return cone;
}

}  // namespace fano_toric
