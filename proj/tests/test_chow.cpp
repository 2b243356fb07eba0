#include <algorithm>

#include "chow.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "errors.hpp"

using namespace fano_toric;

namespace {

struct BlowUp {
  PointConfiguration a = corpus::bl_p2_p5();
  FaceLattice lat{a};
  ToricDivisor h = facet_divisor(lat, corpus::facet_with_normal(lat, {-1, -1, -1, -1, -1}));
  ToricDivisor e = facet_divisor(lat, corpus::facet_with_normal(lat, {1, 1, 1, 0, 0}));
  std::vector<CayleyStructure> maximal = maximal_cayley_structures(lat, {1});
  const CayleyStructure& pi1() const { return maximal[0].length() == 3 ? maximal[0] : maximal[1]; }
  const CayleyStructure& pi2() const { return maximal[0].length() == 3 ? maximal[1] : maximal[0]; }
};

// Degrees of the summands L_i against a fixed curve class given by d-1 divisors.
std::vector<Int> summand_degrees(const FaceLattice& lat, const CayleyStructure& p,
                                 const std::vector<std::size_t>& curve_facets) {
  auto z = cayley_sum_configuration(lat, p);
  FaceLattice zl(z.points);
  auto bundle = universal_bundle(lat, p, z, zl);
  std::vector<Int> out;
  for (const auto& d : bundle.divisors) {
    std::vector<ToricDivisor> classes{d};
    for (auto f : curve_facets) classes.push_back(facet_divisor(zl, f));
    out.push_back(toric_intersection_number(zl, classes));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CayleyStructure identity_structure(const FaceLattice& lat) { return maximal_cayley_structures(lat, {1}).front(); }

}  // namespace

TEST_CASE("Cayley sums") {
  SUBCASE("simplex gives a point") {
    for (std::size_t n = 1; n <= 4; ++n) {
      FaceLattice lat(corpus::simplex(n));
      auto z = cayley_sum_configuration(lat, identity_structure(lat));
      CHECK(z.points.size() == 1);
      FaceLattice zl(z.points);
      CHECK(zl.dim() == 0);
      CHECK(zl.smooth());
      auto bundle = universal_bundle(lat, identity_structure(lat), z, zl);
      CHECK(bundle.generators.size() == n + 1);
      for (const auto& g : bundle.generators) CHECK(g == std::vector<IntVector>{IntVector{}});
    }
  }
  SUBCASE("Bl_P2 P5") {
    BlowUp b;
    for (const auto& p : b.maximal) {
      FaceLattice zl(cayley_sum_configuration(b.lat, p).points);
      CHECK(zl.dim() == 2);
      CHECK(zl.vertices().size() == 3);
      CHECK(zl.smooth());
    }
  }
  SUBCASE("P2 x P2") {
    FaceLattice lat(corpus::product_of_simplices({2, 2}));
    for (const auto& p : maximal_cayley_structures(lat, {1})) {
      FaceLattice zl(cayley_sum_configuration(lat, p).points);
      CHECK(zl.dim() == 2);
      CHECK(zl.vertices().size() == 3);
    }
  }
}

TEST_CASE("universal bundle degrees") {
  SUBCASE("Bl_P2 P5") {
    BlowUp b;
    CHECK(summand_degrees(b.lat, b.pi1(), {0}) == std::vector<Int>{1, 1, 1, 2});
    CHECK(summand_degrees(b.lat, b.pi2(), {0}) == std::vector<Int>{1, 1, 1});
  }
  SUBCASE("products of simplices") {
    FaceLattice lat(corpus::product_of_simplices({2, 2}));
    for (const auto& p : maximal_cayley_structures(lat, {1})) CHECK(summand_degrees(lat, p, {0}) == std::vector<Int>{1, 1, 1});
    // O(1,...,1) on every factor: (l+1) L_i is the embedding class of the sum configuration
    FaceLattice lat3(corpus::product_of_simplices({1, 1, 2}));
    for (const auto& p : maximal_cayley_structures(lat3, {1})) {
      auto z = cayley_sum_configuration(lat3, p);
      FaceLattice zl(z.points);
      for (const auto& d : universal_bundle(lat3, p, z, zl).divisors)
        CHECK(divisor_class(zl, Int{p.length() + 1} * d) == divisor_class(zl, embedding_divisor(zl)));
    }
  }
}

TEST_CASE("toric intersection numbers") {
  SUBCASE("P2") {
    FaceLattice lat(corpus::simplex(2));
    CHECK(toric_intersection_number(lat, {facet_divisor(lat, 0), facet_divisor(lat, 1)}) == 1);
    CHECK(toric_intersection_number(lat, {facet_divisor(lat, 0), facet_divisor(lat, 0)}) == 1);
    CHECK(toric_intersection_number(lat, {embedding_divisor(lat), 3 * embedding_divisor(lat)}) == 3);
  }
  SUBCASE("P1 x P1") {
    FaceLattice lat(corpus::unit_square());
    auto h1 = facet_divisor(lat, corpus::facet_with_normal(lat, {1, 0}));
    auto h2 = facet_divisor(lat, corpus::facet_with_normal(lat, {0, 1}));
    CHECK(toric_intersection_number(lat, {h1, h2}) == 1);
    CHECK(toric_intersection_number(lat, {h1, h1}) == 0);
  }
  SUBCASE("Bl_P P2") {
    FaceLattice lat(PointConfiguration(corpus::bl_p_p2_points()));
    auto e = facet_divisor(lat, corpus::facet_with_normal(lat, {1, 1}));
    auto h = facet_divisor(lat, corpus::facet_with_normal(lat, {-1, -1}));
    CHECK(toric_intersection_number(lat, {e, e}) == -1);
    CHECK(toric_intersection_number(lat, {h, h}) == 1);
    CHECK(toric_intersection_number(lat, {h, e}) == 0);
    // symmetric and multilinear
    for (std::size_t f = 0; f < lat.facets().size(); ++f)
      for (std::size_t g = 0; g < lat.facets().size(); ++g) {
        auto x = facet_divisor(lat, f), y = facet_divisor(lat, g);
        CHECK(toric_intersection_number(lat, {x, y}) == toric_intersection_number(lat, {y, x}));
        CHECK(toric_intersection_number(lat, {x + y, h}) ==
              toric_intersection_number(lat, {x, h}) + toric_intersection_number(lat, {y, h}));
      }
  }
  SUBCASE("argument count") {
    FaceLattice lat(corpus::simplex(2));
    CHECK_THROWS_AS(toric_intersection_number(lat, {facet_divisor(lat, 0)}), PreconditionError);
  }
}

TEST_CASE("Schubert oracle") {
  CHECK(schubert_oracle(4, 1, {3}) == 27);
  CHECK(schubert_oracle(5, 1, {5}) == 2875);
  CHECK(schubert_oracle(5, 1, {2, 2}) == 16);
  CHECK(schubert_oracle(6, 1, {3, 3}) == 1053);
  CHECK(schubert_oracle(6, 1, {2, 4}) == 1280);
  CHECK(schubert_oracle(6, 1, {7}) == 698005);
  CHECK(schubert_oracle(4, 1, {1, 1}) == 1);
  CHECK(schubert_oracle(4, 0, {1, 1, 1}) == 1);
  CHECK(schubert_oracle(3, 0, {2, 2}) == 4);
  CHECK_THROWS_AS(schubert_oracle(4, 1, {1, 1, 1, 1}), PreconditionError);
  CHECK_THROWS_AS(schubert_oracle(4, 1, {4}), PreconditionError);
}

TEST_CASE("localization counts") {
  SUBCASE("projective space") {
    FaceLattice p3(corpus::simplex(3));
    CHECK(count_k_planes(p3, identity_structure(p3), 1, {3}) == 27);
    FaceLattice p4(corpus::simplex(4));
    CHECK(count_k_planes(p4, identity_structure(p4), 1, {5}) == 2875);
    CHECK(count_k_planes(p4, identity_structure(p4), 1, {2, 2}) == 16);
    CHECK_THROWS_AS(count_k_planes(p3, identity_structure(p3), 1, {1, 1, 1, 1}), PreconditionError);
  }
  SUBCASE("Bl_P2 P5") {
    BlowUp b;
    CHECK(count_k_planes(b.lat, b.pi1(), 1, {5}) == 77875);
    CHECK(count_k_planes(b.lat, b.pi2(), 1, {3}) == 189);
    CHECK(count_k_planes(b.lat, b.pi2(), 1, {3}, {17, 3, 0, 0}) == 189);
  }
  SUBCASE("P2 x P2") {
    FaceLattice lat(corpus::product_of_simplices({2, 2}));
    for (const auto& p : maximal_cayley_structures(lat, {1})) CHECK(count_k_planes(lat, p, 1, {3}) == 189);
  }
  SUBCASE("independent of the linearization") {
    BlowUp b;
    for (const auto& [p, delta] : {std::pair{b.pi1(), 5}, std::pair{b.pi2(), 3}}) {
      const auto faces = pi_faces(b.lat, p, p.length()).size();
      REQUIRE(faces > 1);
      for (std::size_t choice = 0; choice < faces; ++choice)
        CHECK(count_k_planes(b.lat, p, 1, {delta}, {1, 1, 0, choice}) == (delta == 5 ? 77875 : 189));
    }
  }
  SUBCASE("fixed-point budget") {
    BlowUp b;
    CHECK_THROWS_AS(count_k_planes(b.lat, b.pi1(), 1, {5}, {1, 1, 5, 0}), BudgetExceeded);
  }
}

TEST_CASE("full counts") {
  SUBCASE("Bl_P2 P5") {
    BlowUp b;
    auto result = full_count(b.lat, {8 * b.h - 3 * b.e}, 1, {2, 0, 0, 1});
    REQUIRE(result.components.size() == 2);
    std::vector<mpz_class> counts;
    for (const auto& c : result.components) {
      REQUIRE(c.count);
      counts.push_back(*c.count);
    }
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<mpz_class>{189, 77875});
    CHECK(result.total == 78064);
    CHECK(result.complete);
  }
  SUBCASE("P2 x P2") {
    FaceLattice lat(corpus::product_of_simplices({2, 2}));
    auto result = full_count(lat, {3 * embedding_divisor(lat)}, 1);
    REQUIRE(result.components.size() == 2);
    CHECK(result.total == 378);
  }
  SUBCASE("cubic surface") {
    FaceLattice lat(corpus::simplex(3));
    auto result = full_count(lat, {3 * embedding_divisor(lat)}, 1);
    REQUIRE(result.components.size() == 1);
    CHECK(result.total == 27);
  }
  SUBCASE("conics contain no lines") {
    FaceLattice lat(corpus::simplex(2));
    auto result = full_count(lat, {2 * embedding_divisor(lat)}, 1);
    REQUIRE(result.components.size() == 1);
    CHECK_FALSE(result.components[0].count);
    CHECK_FALSE(result.complete);
    CHECK(result.components[0].hypotheses.verdict == "empty for general X");
  }
}
