#include "doctest.h"
#include "gdl/certify.hpp"

using namespace gdl;

namespace {
Subspace axes(const Field& f, int n, std::initializer_list<int> idx) {
  Mat m(int(idx.size()), n);
  int i = 0;
  for (int a : idx) m.at(i++, a) = 1;
  return span_of(f, std::move(m));
}
Family single_plane(const Field& f) {
  Family fam;
  fam.field = f.spec();
  fam.n = 6;
  fam.k = 3;
  fam.bits = Bitset(1395);
  fam.bits.set(0);
  fam.construction = "single";
  return fam;
}
}  // namespace

TEST_CASE("degree test certifies and refutes") {
  Field f2 = Field::of_order(2);
  Family pi1 = symplectic_planes(f2, 6, SympWhich::isotropic);
  SUBCASE("isotropic planes are degree 2 but not degree 1") {
    DegreeVerdict d2 = degree_test(f2, pi1, 2);
    CHECK(d2.certified);
    REQUIRE(d2.certificate.has_value());
    CHECK(eval_certificate(f2, pi1, *d2.certificate).replays);
    DegreeVerdict d1 = degree_test(f2, pi1, 1);
    CHECK_FALSE(d1.certified);
    CHECK(d1.witness.has_value());
  }
  SUBCASE("a single plane has no degree-2 certificate") {
    CHECK_FALSE(degree_test(f2, single_plane(f2), 2).certified);
  }
  SUBCASE("the point pencil is degree 1, hence degree 2") {
    Family xp = trivial_pencil(f2, 6, 3, axes(f2, 6, {0}), 1);
    CHECK(degree_test(f2, xp, 1).certified);
    CHECK(degree_test(f2, xp, 2).certified);
  }
  SUBCASE("complement closure") {
    Family c = complement_family(f2, pi1);
    CHECK(degree_test(f2, c, 2).certified);
  }
  SUBCASE("solver cap is a resource error") {
    CHECK_THROWS_AS(degree_test(f2, pi1, 2, /*solver_cap=*/100), Error);
  }
}

TEST_CASE("certificate replay agrees with stored certificates") {
  Field f2 = Field::of_order(2);
  Family pi1 = symplectic_planes(f2, 6, SympWhich::isotropic);
  REQUIRE(pi1.cert.has_value());
  CHECK(eval_certificate(f2, pi1, *pi1.cert).replays);
  // damaging one weight breaks the replay at a definite witness
  WeightCertificate broken = *pi1.cert;
  broken.w[0] += 1;
  auto r = eval_certificate(f2, pi1, broken);
  CHECK_FALSE(r.replays);
  CHECK(r.mismatch.has_value());
  // the all-zero certificate replays the empty family
  Family empty;
  empty.field = f2.spec();
  empty.n = 6;
  empty.k = 3;
  empty.bits = Bitset(1395);
  WeightCertificate zeros{2, RatVec(651, Rat(0))};
  CHECK(eval_certificate(f2, empty, zeros).replays);
}

TEST_CASE("equitable bipartitions") {
  Field f2 = Field::of_order(2);
  SUBCASE("isotropic symplectic planes: ((14,84),(9,89))") {
    Family pi1 = symplectic_planes(f2, 6, SympWhich::isotropic);
    EquitableResult eq = equitable_check(f2, pi1);
    REQUIRE(eq.equitable);
    CHECK(eq.qm.a == 14);
    CHECK(eq.qm.b == 9);
    CHECK(eq.qm.valency == 98);
    auto eig = quotient_eigenvalues(eq.qm);
    REQUIRE(eig.has_value());
    CHECK((*eig)[0] == 98);
    CHECK((*eig)[1] == 5);  // the j = 2 eigenvalue
    CHECK(quotient_eigen_check(eq.qm, 6, 3, 2));
  }
  SUBCASE("full family is trivial") {
    Family full = complement_family(f2, Family{f2.spec(), 6, 3, Bitset(1395), "none"});
    EquitableResult eq = equitable_check(f2, full);
    CHECK(eq.trivial);
    CHECK(eq.qm.a == 98);
  }
  SUBCASE("a single plane is not equitable") {
    EquitableResult eq = equitable_check(f2, single_plane(f2));
    CHECK_FALSE(eq.equitable);
    CHECK(eq.witness.has_value());
  }
  SUBCASE("valency-only matrix fails the spectrum test") {
    QuotientMatrix m{98, 98, 98};  // rows (98, 0), (98, 0)
    auto eig = quotient_eigenvalues(m);
    REQUIRE(eig.has_value());
    CHECK((*eig)[0] == 98);
    CHECK((*eig)[1] == 0);
    CHECK_FALSE(quotient_eigen_check(m, 6, 3, 2));  // 0 is not in the spectrum
  }
}

TEST_CASE("design orthogonality") {
  Field f2 = Field::of_order(2);
  Family spread = spread_family(f2, 6, 3, 3);
  SUBCASE("point pencil meets the spread in exactly one member") {
    Family xp = trivial_pencil(f2, 6, 3, axes(f2, 6, {0}), 1);
    DesignCheckResult r = design_orthogonality_check(f2, xp, spread, 1);
    CHECK(r.status == DesignCheckResult::Status::holds);
    CHECK(r.lambda == 1);
    CHECK(r.actual == 1);
    CHECK(r.expected == Rat(1));
  }
  SUBCASE("hyperplane pencil as well") {
    Family xh = trivial_pencil(f2, 6, 3, axes(f2, 6, {0, 1, 2, 3, 4}), 1);
    DesignCheckResult r = design_orthogonality_check(f2, xh, spread, 1);
    CHECK(r.status == DesignCheckResult::Status::holds);
    CHECK(r.actual == 1);
  }
  SUBCASE("a spread is not a 2-design, so the check refuses at d=2") {
    Family pi1 = symplectic_planes(f2, 6, SympWhich::isotropic);
    DesignCheckResult r = design_orthogonality_check(f2, pi1, spread, 2);
    CHECK(r.status == DesignCheckResult::Status::refused_not_design);
    CHECK(r.witness.has_value());
  }
  SUBCASE("degree-refused for a non-low-degree family") {
    DesignCheckResult r = design_orthogonality_check(f2, single_plane(f2), spread, 1);
    CHECK(r.status == DesignCheckResult::Status::refused_degree);
  }
}

TEST_CASE("divisibility report") {
  SUBCASE("small-parameter moduli") {
    CHECK(divisibility_report(6, 3, 2, 0)[0].modulus == 5);
    CHECK(divisibility_report(6, 3, 3, 0)[0].modulus == 10);
    CHECK(divisibility_report(6, 3, 4, 0)[0].modulus == 17);
    CHECK(divisibility_report(6, 3, 5, 0)[0].modulus == 2);
    for (int q : {2, 3, 4, 5})
      CHECK(divisibility_report(7, 3, q, 0)[0].modulus == q_int(5, q));
    CHECK(divisibility_report(8, 4, 2, 0)[0].modulus == 93);
    CHECK(divisibility_report(8, 4, 3, 0)[0].modulus == 121);
    CHECK(divisibility_report(8, 4, 4, 0)[0].modulus == 341);
    CHECK(divisibility_report(8, 4, 5, 0)[0].modulus == 781);
  }
  SUBCASE("satisfaction flags") {
    auto a = divisibility_report(6, 3, 2, 135);
    CHECK(a[0].satisfied);
    auto b = divisibility_report(8, 4, 2, 23715);
    CHECK(b[0].satisfied);  // 23715 = 93 * 255
    auto c = divisibility_report(7, 3, 3, 100);
    CHECK(c[0].modulus == 121);
    CHECK_FALSE(c[0].satisfied);
  }
  SUBCASE("scaled conditions for k = 3") {
    auto r = divisibility_report(11, 3, 2, 100);
    REQUIRE(r.size() == 1);
    CHECK(r[0].multiplier == 7);   // q^3 - 1
    CHECK(r[0].modulus == 511);    // q^9 - 1
    for (auto [q, mod] : std::vector<std::pair<int, uint64_t>>{
             {3, 19682}, {4, 262143}, {5, 1953124}, {7, 40353606}}) {
      auto rr = divisibility_report(11, 3, q, 0);
      if (q == 4) {
        CHECK(rr.empty());  // 4 is not prime
      } else {
        REQUIRE(!rr.empty());
        CHECK(rr[0].modulus == mod);
      }
    }
  }
  SUBCASE("binary conditions at n = 24") {
    auto r = divisibility_report(24, 3, 2, 0);
    REQUIRE(r.size() == 2);  // the two values of C at n = 8m
    CHECK(r[0].multiplier == 42);
    CHECK(r[1].multiplier == 312);
    CHECK(r[0].modulus == (uint64_t(1) << 22) - 1);
  }
  SUBCASE("uncovered parameters give an empty report") {
    CHECK(divisibility_report(12, 5, 2, 100).empty());
  }
}

TEST_CASE("junta analysis") {
  Field f2 = Field::of_order(2);
  SUBCASE("the point pencil depends on its point") {
    Family xp = trivial_pencil(f2, 6, 3, axes(f2, 6, {0}), 1);
    CHECK(junta_depends(f2, xp, {axes(f2, 6, {0})}).depends);
    // and on no other single point
    auto r = junta_depends(f2, xp, {axes(f2, 6, {1})});
    CHECK_FALSE(r.depends);
    REQUIRE(r.witness.has_value());
    CHECK(xp.bits.get(r.witness->first) != xp.bits.get(r.witness->second));
  }
  SUBCASE("cover bound of the point pencil is 1") {
    Family xp = trivial_pencil(f2, 6, 3, axes(f2, 6, {0}), 1);
    CoverBound cb = junta_cover_bound(f2, xp);
    CHECK_FALSE(cb.trivial);
    CHECK(cb.alpha_star == 155);
    CHECK(cb.bound == 1);
  }
  SUBCASE("empty and full families are trivial") {
    Family empty{f2.spec(), 6, 3, Bitset(1395), "none"};
    CHECK(junta_cover_bound(f2, empty).trivial);
    CHECK(junta_cover_bound(f2, complement_family(f2, empty)).trivial);
  }
}

TEST_CASE("covering family search") {
  Field f2 = Field::of_order(2);
  SUBCASE("default budget succeeds on J_2(6,3) for these seeds") {
    for (uint64_t seed : {1, 2, 3}) {
      CoveringResult r = covering_family_search(f2, 6, 3, 36, seed);
      CHECK(r.success);
      CHECK(r.members.size() == 36);
      for (const Subspace& h : r.members) CHECK(h.dim() == 4);  // n-k+1
    }
  }
  SUBCASE("budget 1 always fails for k >= 2") {
    CoveringResult r = covering_family_search(f2, 6, 3, 1, 7);
    CHECK_FALSE(r.success);
    CHECK(r.witness.has_value());
  }
  SUBCASE("deterministic per seed") {
    CoveringResult a = covering_family_search(f2, 6, 3, 5, 42);
    CoveringResult b = covering_family_search(f2, 6, 3, 5, 42);
    REQUIRE(a.members.size() == b.members.size());
    for (size_t i = 0; i < a.members.size(); ++i) CHECK(a.members[i] == b.members[i]);
  }
}

TEST_CASE("degree monotonicity on degree-1 families") {
  Field f2 = Field::of_order(2);
  for (auto t : {axes(f2, 6, {0}), axes(f2, 6, {0, 1, 2, 3, 4})}) {
    Family fam = trivial_pencil(f2, 6, 3, t, 1);
    CHECK(degree_test(f2, fam, 1).certified);
    CHECK(degree_test(f2, fam, 2).certified);
  }
}
