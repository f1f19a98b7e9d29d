#include <algorithm>
#include <set>

#include "doctest.h"
#include "gdl/setdomains.hpp"

using namespace gdl;

TEST_CASE("multilinear degree") {
  CHECK(multilinear_degree(cube_xor(2)) == 2);  // x + y - 2xy
  CHECK(multilinear_degree(cube_constant(3, true)) == 0);
  CHECK(multilinear_degree(cube_constant(3, false)) == 0);
  CHECK(multilinear_degree(cube_and(3)) == 3);  // xyz
  CHECK(multilinear_degree(cube_variable(4, 2)) == 1);
  CHECK(multilinear_degree(cube_xor(4)) == 4);
}

TEST_CASE("complementation preserves the degree of nonconstant functions") {
  for (int m = 1; m <= 4; ++m) {
    uint32_t size = uint32_t(1) << (uint32_t(1) << m);
    for (uint32_t bits = 1; bits + 1 < size; ++bits) {  // skip the constants
      CubeFunction f = cube_from_bits(m, bits);
      CubeFunction g = cube_from_bits(m, ~uint64_t(bits) & (size - 1));
      CHECK(multilinear_degree(f) == multilinear_degree(g));
    }
    if (m == 3) break;  // exhaustive up to m = 3; m = 4 sampled below
  }
  Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    uint64_t bits = rng.next() & 0xffff;
    if (bits == 0 || bits == 0xffff) continue;
    CubeFunction f = cube_from_bits(4, bits);
    CubeFunction g = cube_from_bits(4, ~bits & 0xffff);
    CHECK(multilinear_degree(f) == multilinear_degree(g));
  }
}

TEST_CASE("degree-2 classification of four-variable functions") {
  CubeClassification cls = classify_degree2_small();
  CHECK(cls.representatives.size() == 7);
  // the named list: 0, x, AND, XOR, the multiplexer, Ind(x=y=z),
  // Ind(monotone chain); all land in distinct classes
  auto canon_of = [](const CubeFunction& f) {
    uint16_t t = 0;
    for (uint32_t x = 0; x < 16; ++x) {
      uint32_t y = x & ((uint32_t(1) << f.m) - 1);
      if (cube_eval(f, y)) t |= uint16_t(1) << x;
    }
    return cube_canonical_form(t);
  };
  std::set<uint16_t> named;
  named.insert(canon_of(cube_constant(4, false)));
  named.insert(canon_of(cube_variable(4, 0)));
  named.insert(canon_of(cube_and(2)));
  named.insert(canon_of(cube_xor(2)));
  {
    // multiplexer: x ? y : z
    CubeFunction mux{3, Bitset(8)};
    for (uint32_t v = 0; v < 8; ++v) {
      bool x = v & 1, y = v & 2, z = v & 4;
      if (x ? y : z) mux.table.set(v);
    }
    CHECK(multilinear_degree(mux) == 2);
    named.insert(canon_of(mux));
  }
  {
    CubeFunction eq3{3, Bitset(8)};
    eq3.table.set(0);
    eq3.table.set(7);
    CHECK(multilinear_degree(eq3) == 2);
    named.insert(canon_of(eq3));
  }
  {
    // monotone chains of length 4, ascending or descending
    CubeFunction chain{4, Bitset(16)};
    for (uint32_t v : {0b0000u, 0b1000u, 0b1100u, 0b1110u, 0b1111u, 0b0111u, 0b0011u, 0b0001u})
      chain.table.set(v);
    CHECK(multilinear_degree(chain) == 2);
    named.insert(canon_of(chain));
  }
  CHECK(named.size() == 7);
  for (uint16_t rep : named)
    CHECK(std::find(cls.representatives.begin(), cls.representatives.end(), rep) !=
          cls.representatives.end());
}

TEST_CASE("colex ranking round trip") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{8, 4}, {6, 3}, {6, 2}, {5, 5}}) {
    for (uint64_t r = 0; r < binom(n, k); ++r) {
      uint32_t mask = colex_unrank(n, k, r);
      CHECK(__builtin_popcount(mask) == k);
      CHECK(colex_rank(mask) == r);
    }
  }
}

TEST_CASE("the J(8,4) example") {
  JohnsonExample ex = johnson_example_84();
  CHECK(ex.family.size() == 30);
  CHECK(ex.quotient == std::array<int64_t, 4>{8, 8, 6, 10});
  CHECK(ex.quotient[0] + ex.quotient[1] == 16);  // valency k(n-k)
  JohnsonVerdict v = johnson_degree_test(ex.family, 2);
  CHECK(v.certified);
  CHECK(johnson_depends_on(ex.family, 0b11111));
  // not a junta on any four coordinates
  for (uint32_t m = 0; m < 256; ++m)
    if (__builtin_popcount(m) == 4) CHECK_FALSE(johnson_depends_on(ex.family, m));
}

TEST_CASE("groupwise designs") {
  SetFamily f = groupwise_family(6, 2, 3);
  CHECK(f.size() == 12);  // 3 parts x C(4,1)
  CHECK(johnson_degree_test(f, 2).certified);
  CHECK_FALSE(johnson_degree_test(f, 1).certified);
  SetFamily tiny = groupwise_family(4, 2, 2);
  CHECK(tiny.size() == 2);  // the parts themselves
  CHECK_THROWS_AS(groupwise_family(5, 2, 3), Error);  // d does not divide n
  CHECK_THROWS_AS(groupwise_family(6, 2, 4), Error);  // k > 2d-1
}

TEST_CASE("johnson degree test refutations") {
  SUBCASE("one 3-set in J(6,3) is not degree 1") {
    SetFamily f{6, 3, Bitset(binom(6, 3))};
    f.bits.set(0);
    JohnsonVerdict v = johnson_degree_test(f, 1);
    CHECK_FALSE(v.certified);
    CHECK(v.witness.has_value());
  }
  SUBCASE("the full family has degree 0") {
    SetFamily f{6, 3, Bitset(binom(6, 3))};
    for (uint64_t i = 0; i < f.bits.size(); ++i) f.bits.set(i);
    CHECK(johnson_degree_test(f, 0).certified);
  }
}

TEST_CASE("johnson equitable detection") {
  // groupwise (4,2,2): the two parts; each 2-set neighbors the other part?
  SetFamily f = groupwise_family(4, 2, 2);
  auto eq = johnson_equitable(f);
  REQUIRE(eq.has_value());
  // a part {1,2}: neighbors are 2-sets meeting it in one point: none is a part
  CHECK((*eq)[0] == 0);
}
