#include <cstdio>

#include "doctest.h"
#include "gdl/io.hpp"

using namespace gdl;

TEST_CASE("field spec round trip") {
  FieldSpec s = Field::of_order(9).spec();
  FieldSpec back = field_from_json(field_to_json(s));
  CHECK(back == s);
}

TEST_CASE("family files round trip with certificates") {
  Field f2 = Field::of_order(2);
  Family fam = symplectic_planes(f2, 6, SympWhich::isotropic);
  json j = family_to_json(fam);
  Family back = family_from_json(j);
  CHECK(back.n == fam.n);
  CHECK(back.k == fam.k);
  CHECK(back.bits == fam.bits);
  CHECK(back.construction == fam.construction);
  REQUIRE(back.cert.has_value());
  CHECK(back.cert->d == fam.cert->d);
  CHECK(back.cert->w == fam.cert->w);
}

TEST_CASE("corrupted files are rejected") {
  Field f2 = Field::of_order(2);
  Family fam = trivial_pencil(f2, 6, 3, span_of_vectors(f2, 6, {{1, 0, 0, 0, 0, 0}}), 1);
  json j = family_to_json(fam);
  SUBCASE("bitset length mismatch") {
    j["bitset"] = base64_encode({0x01, 0x02});
    try {
      family_from_json(j);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()) == "bitset length mismatch");
      CHECK(e.code() == Errc::verify);
    }
  }
  SUBCASE("wrong total") {
    j["total"] = 1234;
    CHECK_THROWS_AS(family_from_json(j), Error);
  }
  SUBCASE("wrong version") {
    j["version"] = "gdl-v0";
    CHECK_THROWS_AS(family_from_json(j), Error);
  }
  SUBCASE("size disagreeing with the bitset") {
    j["size"] = fam.size() + 1;
    CHECK_THROWS_AS(family_from_json(j), Error);
  }
}

TEST_CASE("group files round trip") {
  Field f2 = Field::of_order(2);
  GroupFile g;
  g.field = f2.spec();
  g.n = 6;
  g.generators = symplectic_transvection_generators(f2, 6);
  GroupFile back = group_from_json(group_to_json(g));
  REQUIRE(back.generators.size() == g.generators.size());
  for (size_t i = 0; i < g.generators.size(); ++i) {
    CHECK(back.generators[i].matrix == g.generators[i].matrix);
    CHECK(back.generators[i].frob == g.generators[i].frob);
  }
}

TEST_CASE("subspace json") {
  Field f3 = Field::of_order(3);
  Subspace s = span_of_vectors(f3, 4, {{1, 2, 0, 1}, {0, 0, 1, 2}});
  Subspace back = subspace_from_json(f3, subspace_to_json(s));
  CHECK(back == s);
}

TEST_CASE("manifest digests are reproducible and track the payload") {
  json payload{{"answer", 42}, {"list", {1, 2, 3}}};
  RunManifest m;
  m.command = "gdl test";
  m.seed = 7;
  json a = with_manifest(m, payload);
  m.wall_ms = 123.0;  // timing does not enter the digest
  json b = with_manifest(m, payload);
  CHECK(a.at("manifest").at("digest") == b.at("manifest").at("digest"));
  json c = with_manifest(m, json{{"answer", 43}});
  CHECK(a.at("manifest").at("digest") != c.at("manifest").at("digest"));
}

TEST_CASE("file round trip on disk") {
  Field f2 = Field::of_order(2);
  Family fam = spread_family(f2, 6, 3, 3);
  std::string path = "/tmp/gdl_test_family.json";
  save_family(path, fam);
  Family back = load_family(path);
  CHECK(back.bits == fam.bits);
  std::remove(path.c_str());
}
