#include "doctest.h"
#include "gdl/orbits.hpp"

using namespace gdl;

TEST_CASE("symplectic transvections") {
  Field f2 = Field::of_order(2);
  auto gens = symplectic_transvection_generators(f2, 6);
  CHECK(gens.size() == 63);  // one per projective point
  ClassicalForm sigma =
      standard_form(f2, FormKind::symplectic, FormSubtype::symplectic_nondegenerate, 6);
  for (const auto& g : gens) CHECK(preserves_form(f2, g, sigma));
  CHECK_THROWS_AS(symplectic_transvection_generators(f2, 5), Error);
}

TEST_CASE("a transvection fixes the perp of its center pointwise") {
  Field f3 = Field::of_order(3);
  auto gens = symplectic_transvection_generators(f3, 4);
  ClassicalForm sigma =
      standard_form(f3, FormKind::symplectic, FormSubtype::symplectic_nondegenerate, 4);
  // centers enumerate projective points in for_each_point order
  std::vector<std::vector<Elem>> centers;
  for_each_point(f3, span_of(f3, identity_mat(4)),
                 [&](const std::vector<Elem>& v) { centers.push_back(v); });
  REQUIRE(centers.size() == gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    Subspace perp_h = perp(f3, sigma, span_of_vectors(f3, 4, {centers[i]}));
    for_each_point(f3, perp_h, [&](const std::vector<Elem>& x) {
      std::vector<Elem> img(4, 0);
      for (int r = 0; r < 4; ++r) {
        if (x[r] == 0) continue;
        for (int c = 0; c < 4; ++c)
          img[c] = f3.add(img[c], f3.mul(x[r], gens[i].matrix.at(r, c)));
      }
      CHECK(img == x);
    });
  }
}

TEST_CASE("orbit decomposition of Sp(6,2)") {
  Field f2 = Field::of_order(2);
  auto gens = symplectic_transvection_generators(f2, 6);
  auto pts = orbit_decomposition(f2, 6, gens, 1);
  CHECK(pts.orbits.size() == 1);  // transitive on points
  CHECK(pts.orbits[0].size() == 63);
  auto lines = orbit_decomposition(f2, 6, gens, 2);
  CHECK(lines.orbits.size() == 2);
  auto planes = orbit_decomposition(f2, 6, gens, 3);
  REQUIRE(planes.orbits.size() == 2);
  std::vector<uint64_t> sizes{planes.orbits[0].size(), planes.orbits[1].size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<uint64_t>{135, 1260});
  // orbit sizes always sum to the Grassmannian
  CHECK(planes.orbits[0].size() + planes.orbits[1].size() == 1395);
}

TEST_CASE("orbit decomposition of the trivial group") {
  Field f2 = Field::of_order(2);
  std::vector<SemilinearMap> id{{identity_mat(4), 0}};
  auto pts = orbit_decomposition(f2, 4, id, 1);
  CHECK(pts.orbits.size() == 15);
  for (const auto& o : pts.orbits) CHECK(o.size() == 1);
}

TEST_CASE("orbit comparison and the degree consequence") {
  Field f2 = Field::of_order(2);
  SUBCASE("Sp(6,2) has equality, orbits are degree 2") {
    auto gens = symplectic_transvection_generators(f2, 6);
    BlockCheck bc = block_equality_check(f2, 6, gens, 2, 3);
    CHECK(bc.s == 2);
    CHECK(bc.t == 2);
    CHECK(bc.equal);
    REQUIRE(bc.orbit_verdicts.size() == 2);
    for (const auto& v : bc.orbit_verdicts) CHECK(v.certified);
  }
  SUBCASE("the trivial group has strict inequality") {
    std::vector<SemilinearMap> id{{identity_mat(4), 0}};
    BlockCheck bc = block_equality_check(f2, 4, id, 1, 2, /*certify=*/false);
    CHECK(bc.s == 15);
    CHECK(bc.t == 35);
    CHECK_FALSE(bc.equal);
  }
  SUBCASE("outside the rank regime is rejected") {
    std::vector<SemilinearMap> id{{identity_mat(4), 0}};
    CHECK_THROWS_AS(block_equality_check(f2, 4, id, 3, 3), Error);  // d > n-k
  }
}

TEST_CASE("orbit union search over Sp(6,2)") {
  Field f2 = Field::of_order(2);
  auto gens = symplectic_transvection_generators(f2, 6);
  auto found = orbit_union_search(f2, 6, gens, 2, 3);
  REQUIRE(found.size() == 2);
  CHECK(found[0].size() == 135);
  CHECK(found[1].size() == 1260);
  for (const Family& fam : found) {
    REQUIRE(fam.cert.has_value());
    CHECK(eval_certificate(f2, fam, *fam.cert).replays);
  }
  // the two unions match the classification by the form
  Family pi1 = symplectic_planes(f2, 6, SympWhich::isotropic);
  CHECK(found[0].bits == pi1.bits);
}

TEST_CASE("semilinear composition acts as iterated action") {
  Field f4 = Field::of_order(4);
  Rng rng(9);
  SemilinearMap a{random_gl(f4, 3, rng.next()), 1};
  SemilinearMap b{random_gl(f4, 3, rng.next()), 1};
  SemilinearMap ab = compose(f4, a, b);
  CHECK(ab.frob == 0);  // 1 + 1 mod 2
  SubspaceEnum e(f4, 3, 1);
  for (uint64_t i = 0; i < e.total(); ++i) {
    Subspace s = e.unrank(i);
    CHECK(apply_map(f4, ab, s) == apply_map(f4, a, apply_map(f4, b, s)));
  }
}

TEST_CASE("singular generators are rejected") {
  Field f2 = Field::of_order(2);
  Mat z(4, 4);  // zero matrix
  std::vector<SemilinearMap> bad{{z, 0}};
  CHECK_THROWS_AS(orbit_decomposition(f2, 4, bad, 1), Error);
}
