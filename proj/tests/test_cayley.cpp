#include <functional>

#include "cayley.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "errors.hpp"

using namespace fano_toric;

namespace {

// Oracle: every set partition of every face with at least two blocks, kept when
// the assignment respects all affine relations.
std::vector<CayleyStructure> brute_force(const FaceLattice& lat, int min_length) {
  std::vector<CayleyStructure> out;
  for (const auto& f : lat.faces()) {
    auto members = f.members.elements();
    std::vector<int> label(members.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
      if (i == members.size()) {
        if (used < min_length + 1) return;
        std::vector<IndexSet> fibers(static_cast<std::size_t>(used), IndexSet(f.members.universe()));
        for (std::size_t j = 0; j < members.size(); ++j) fibers[static_cast<std::size_t>(label[j])].insert(members[j]);
        auto p = make_cayley_structure(lat, f.members, fibers);
        if (preserves_affine_relations(lat.configuration(), p)) out.push_back(p);
        return;
      }
      for (int c = 0; c <= used; ++c) {
        label[i] = c;
        rec(i + 1, std::max(used, c + 1));
      }
    };
    rec(0, 0);
  }
  return out;
}

bool same_set(std::vector<CayleyStructure> a, std::vector<CayleyStructure> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (std::find(b.begin(), b.end(), p) == b.end()) return false;
  return true;
}

IndexSet where(const PointConfiguration& a, const std::function<bool(const LatticePoint&)>& pred) {
  IndexSet s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (pred(a[i])) s.insert(i);
  return s;
}

}  // namespace

TEST_CASE("simplices carry one structure of full length") {
  for (std::size_t n = 1; n <= 4; ++n) {
    FaceLattice lat(corpus::simplex(n));
    auto all = enumerate_cayley_structures(lat, {static_cast<int>(n)});
    REQUIRE(all.size() == 1);
    CHECK(all[0].length() == static_cast<int>(n));
    CHECK(all[0].face.size() == n + 1);
  }
}

TEST_CASE("enumeration agrees with brute force over all partitions") {
  for (const auto& a : {corpus::unit_square(), corpus::simplex(3), corpus::product_of_simplices({1, 2}),
                        PointConfiguration(corpus::bl_p_p2_points())}) {
    FaceLattice lat(a);
    auto fast = enumerate_cayley_structures(lat, {1});
    CHECK(same_set(fast, brute_force(lat, 1)));
    for (const auto& p : fast) CHECK(preserves_affine_relations(a, p));
  }
  FaceLattice sq(corpus::unit_square());
  auto all = enumerate_cayley_structures(sq, {1});
  CHECK(all.size() == 6);  // two projections, four edges
}

TEST_CASE("Bl_P2 P5 structures") {
  auto a = corpus::bl_p2_p5();
  FaceLattice lat(a);
  auto tau = where(a, [](const LatticePoint& u) { return u[0] + u[1] + u[2] == 1; });
  auto maximal = maximal_cayley_structures(lat, {1});
  REQUIRE(maximal.size() == 2);
  const auto& pi1 = maximal[0].length() == 3 ? maximal[0] : maximal[1];
  const auto& pi2 = maximal[0].length() == 3 ? maximal[1] : maximal[0];
  CHECK(pi1.length() == 3);
  CHECK(pi1.face == a.all());
  CHECK(pi2.length() == 2);
  CHECK(pi2.face == tau);
  CHECK_FALSE(leq(pi1, pi2));
  CHECK_FALSE(leq(pi2, pi1));
  CHECK(leq(pi1, pi1));

  auto at_least_two = enumerate_cayley_structures(lat, {2});
  CHECK(std::find(at_least_two.begin(), at_least_two.end(), pi1) != at_least_two.end());
  CHECK(std::find(at_least_two.begin(), at_least_two.end(), pi2) != at_least_two.end());

  CHECK(component_dimension(pi1, 1) == 6);
  CHECK(component_dimension(pi2, 1) == 4);

  // pi_2 faces for k = 2: the three triangles {e_i + t} for fixed t
  auto sigma = pi_faces(lat, pi2, 2);
  std::size_t brute = 0;
  auto members = tau.elements();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      for (std::size_t k = j + 1; k < members.size(); ++k) {
        IndexSet s(a.size(), {members[i], members[j], members[k]});
        auto f = lat.find_face(s);
        if (!f || lat.faces()[*f].dim != 2) continue;
        if (pi2.fiber_of(members[i]) == pi2.fiber_of(members[j]) ||
            pi2.fiber_of(members[i]) == pi2.fiber_of(members[k]) ||
            pi2.fiber_of(members[j]) == pi2.fiber_of(members[k]))
          continue;
        ++brute;
      }
  CHECK(sigma.size() == brute);
  CHECK(sigma.size() == 3);

  auto proj = induced_projection(a, pi2);
  std::size_t pairs = 0;
  for (auto v : members)
    for (auto w : members) {
      if (v >= w) continue;
      IntVector expected(3, 0);
      expected[static_cast<std::size_t>(pi2.fiber_of(v))] += 1;
      expected[static_cast<std::size_t>(pi2.fiber_of(w))] -= 1;
      CHECK(*proj.apply(subtract(a[v], a[w])) == expected);
      ++pairs;
    }
  CHECK(pairs == 36);
  CHECK_THROWS_AS(enumerate_cayley_structures(lat, {1, 50}), BudgetExceeded);
}

TEST_CASE("products of simplices: the factor projections are maximal") {
  FaceLattice p2p2(corpus::product_of_simplices({2, 2}));
  auto m = maximal_cayley_structures(p2p2, {1});
  REQUIRE(m.size() == 2);
  for (const auto& p : m) CHECK(p.length() == 2);
  FaceLattice three(corpus::product_of_simplices({1, 1, 2}));
  auto m3 = maximal_cayley_structures(three, {1});
  CHECK(m3.size() == 3);
}

TEST_CASE("pi-faces and projections of simple structures") {
  for (std::size_t n = 1; n <= 4; ++n) {
    FaceLattice lat(corpus::simplex(n));
    auto id = enumerate_cayley_structures(lat, {static_cast<int>(n)}).at(0);
    std::size_t binom = n + 1;
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(pi_faces(lat, id, static_cast<int>(k)).size() == binom);
      binom = binom * (n + 1 - (k + 1)) / (k + 2);
    }
    CHECK(component_dimension(id, static_cast<int>(n)) == 0);
    CHECK_THROWS_AS(pi_faces(lat, id, static_cast<int>(n) + 1), PreconditionError);
    auto proj = induced_projection(lat.configuration(), id);
    for (std::size_t i = 1; i <= n; ++i) {
      IntVector e(n, 0);
      e[i - 1] = 1;
      IntVector expected(n + 1, 0);
      expected[static_cast<std::size_t>(id.fiber_of(i))] = 1;
      expected[static_cast<std::size_t>(id.fiber_of(0))] = -1;
      CHECK(*proj.apply(e) == expected);
    }
  }
  auto sq = corpus::unit_square();
  FaceLattice lat(sq);
  for (const auto& p : enumerate_cayley_structures(lat, {1})) {
    if (p.face != sq.all()) continue;
    auto proj = induced_projection(sq, p);
    CHECK(proj.matrix.size() == 2);
    // exactly one coordinate direction is collapsed
    auto x = *proj.apply({1, 0});
    auto y = *proj.apply({0, 1});
    CHECK((is_zero(x) != is_zero(y)));
    CHECK(pi_faces(lat, p, 1).size() == 2);
  }
}

TEST_CASE("order properties on the corpus") {
  for (const auto& a : {corpus::bl_p2_p5(), corpus::product_of_simplices({2, 2}), corpus::bl_p_p2_times_simplex(2)}) {
    FaceLattice lat(a);
    auto all = enumerate_cayley_structures(lat, {1});
    auto maximal = maximal_cayley_structures(lat, {1});
    for (const auto& p : all) CHECK(preserves_affine_relations(a, p));
    for (const auto& p : maximal)
      for (const auto& q : maximal)
        if (!(p == q)) CHECK_FALSE(leq(p, q));
    for (const auto& p : all) {
      bool below = false;
      for (const auto& q : maximal) below = below || leq(p, q);
      CHECK(below);
    }
    for (const auto& p : all)
      for (const auto& q : all)
        if (leq(p, q) && leq(q, p)) CHECK(p == q);
    for (const auto& p : maximal)
      for (int k = 1; k <= p.length(); ++k)
        for (auto s : pi_faces(lat, p, k)) {
          auto r = restrict_structure(lat, p, lat.faces()[s].members);
          CHECK(r.length() == k);
          CHECK(leq(r, p));
          CHECK(preserves_affine_relations(a, r));
        }
    CHECK(maximal == maximal_cayley_structures(lat, {1, 0, 4}));
  }
}
