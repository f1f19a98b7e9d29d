#include "doctest.h"
#include "gdl/forms.hpp"

using namespace gdl;

namespace {
Subspace full_space(const Field& f, int n) { return span_of(f, identity_mat(n)); }
}  // namespace

TEST_CASE("standard symplectic form is alternating and nondegenerate") {
  for (int q : {2, 3}) {
    Field f = Field::of_order(q);
    ClassicalForm s = standard_form(f, FormKind::symplectic, FormSubtype::symplectic_nondegenerate, 6);
    for (int i = 0; i < 6; ++i) {
      CHECK(s.coeff.at(i, i) == 0);
      for (int j = 0; j < 6; ++j) CHECK(s.coeff.at(i, j) == f.neg(s.coeff.at(j, i)));
    }
    CHECK(perp(f, s, full_space(f, 6)).dim() == 0);
    // every point is isotropic: radical of a point is the point
    SubspaceEnum pts(f, 6, 1);
    for (uint64_t i = 0; i < std::min<uint64_t>(pts.total(), 50); ++i) {
      auto [sp, rad] = perp_radical(f, s, pts.unrank(i));
      CHECK(sp.dim() == 5);
      CHECK(rad.dim() == 1);
    }
  }
}

TEST_CASE("singular point counts of the standard quadrics") {
  Field f2 = Field::of_order(2);
  ClassicalForm e6 = standard_form(f2, FormKind::quadratic, FormSubtype::elliptic, 6);
  CHECK(singular_point_count(f2, e6, full_space(f2, 6)) == 27);
  ClassicalForm e8 = standard_form(f2, FormKind::quadratic, FormSubtype::elliptic, 8);
  CHECK(singular_point_count(f2, e8, full_space(f2, 8)) == 119);  // (q^4+1)(q^2+q+1)
  ClassicalForm h6 = standard_form(f2, FormKind::quadratic, FormSubtype::hyperbolic, 6);
  CHECK(singular_point_count(f2, h6, full_space(f2, 6)) == 35);
  ClassicalForm p5 = standard_form(f2, FormKind::quadratic, FormSubtype::parabolic, 5);
  CHECK(singular_point_count(f2, p5, full_space(f2, 5)) == 15);
  // O^-(4,2): 5 points, the classical minimum
  ClassicalForm e4 = standard_form(f2, FormKind::quadratic, FormSubtype::elliptic, 4);
  CHECK(singular_point_count(f2, e4, full_space(f2, 4)) == 5);
}

TEST_CASE("subtype recomputation matches the tag") {
  for (int q : {2, 3}) {
    Field f = Field::of_order(q);
    for (auto st : {FormSubtype::hyperbolic, FormSubtype::elliptic}) {
      ClassicalForm form = standard_form(f, FormKind::quadratic, st, 6);
      CHECK(detect_quadratic_subtype(f, form) == st);
    }
    ClassicalForm p = standard_form(f, FormKind::quadratic, FormSubtype::parabolic, 5);
    CHECK(detect_quadratic_subtype(f, p) == FormSubtype::parabolic);
  }
  // a visibly degenerate form: Q = x1^2 on F_2^4 has radical points
  Field f2 = Field::of_order(2);
  ClassicalForm d;
  d.kind = FormKind::quadratic;
  d.subtype = FormSubtype::degenerate;
  d.n = 4;
  d.coeff = Mat(4, 4);
  d.coeff.at(0, 0) = 1;
  CHECK(detect_quadratic_subtype(f2, d) == FormSubtype::degenerate);
}

TEST_CASE("mismatched subtype and dimension are rejected") {
  Field f2 = Field::of_order(2);
  CHECK_THROWS_AS(standard_form(f2, FormKind::quadratic, FormSubtype::elliptic, 5), Error);
  CHECK_THROWS_AS(standard_form(f2, FormKind::quadratic, FormSubtype::parabolic, 6), Error);
  CHECK_THROWS_AS(standard_form(f2, FormKind::symplectic, FormSubtype::symplectic_nondegenerate, 5),
                  Error);
}

TEST_CASE("symplectic plane types partition J_2(6,3) into 135 + 1260") {
  Field f2 = Field::of_order(2);
  ClassicalForm s = standard_form(f2, FormKind::symplectic, FormSubtype::symplectic_nondegenerate, 6);
  SubspaceEnum planes(f2, 6, 3);
  uint64_t iso = 0, pr = 0;
  for (uint64_t i = 0; i < planes.total(); ++i) {
    Subspace pl = planes.unrank(i);
    (classify_symplectic_plane(f2, s, pl) == SympPlaneType::isotropic ? iso : pr) += 1;
  }
  CHECK(iso == 135);  // (q+1)(q^2+1)(q^3+1)
  CHECK(pr == 1260);
  CHECK(iso + pr == 1395);
}

TEST_CASE("isotropic lines sit inside their perp") {
  Field f2 = Field::of_order(2);
  ClassicalForm s = standard_form(f2, FormKind::symplectic, FormSubtype::symplectic_nondegenerate, 6);
  SubspaceEnum lines(f2, 6, 2);
  int iso_seen = 0;
  for (uint64_t i = 0; i < lines.total(); ++i) {
    Subspace l = lines.unrank(i);
    auto [sp, rad] = perp_radical(f2, s, l);
    CHECK(sp.dim() == 4);
    if (classify_symplectic_line(f2, s, l) == SympLineType::isotropic) {
      CHECK(contains(f2, sp, l));
      CHECK(rad == l);
      ++iso_seen;
    } else {
      CHECK(rad.dim() == 0);
    }
  }
  CHECK(iso_seen > 0);
}

TEST_CASE("plane type-count matrix matches the closed form") {
  for (int q : {2, 3}) {
    Field f = Field::of_order(q);
    auto expect = plane_matrix_formula(q);
    // row sums are the number of lines of a plane
    for (const auto& row : expect)
      CHECK(uint64_t(row[0] + row[1] + row[2] + row[3]) == q_int(3, q));

    {
      ClassicalForm form = standard_form(f, FormKind::quadratic, FormSubtype::hyperbolic, 6);
      TypeCountMatrix m = type_count_matrix(f, form, 3);
      uint64_t total = 0;
      for (int t = 0; t < 5; ++t) {
        CHECK(m.occurs[t]);  // all five types occur in the hyperbolic space
        for (int i = 0; i < 4; ++i) CHECK(int64_t(m.rows[t][i]) == expect[t][i]);
        total += m.cells_of_type[t];
      }
      CHECK(total == gaussian_binomial(6, 3, q));
    }
    {
      ClassicalForm form = standard_form(f, FormKind::quadratic, FormSubtype::elliptic, 6);
      TypeCountMatrix m = type_count_matrix(f, form, 3);
      CHECK_FALSE(m.occurs[0]);  // no totally singular planes in the elliptic case
      for (int t = 1; t < 5; ++t) {
        CHECK(m.occurs[t]);
        for (int i = 0; i < 4; ++i) CHECK(int64_t(m.rows[t][i]) == expect[t][i]);
      }
    }
  }
}

TEST_CASE("double count: plane rows against global line counts (q=2, hyperbolic)") {
  Field f2 = Field::of_order(2);
  ClassicalForm form = standard_form(f2, FormKind::quadratic, FormSubtype::hyperbolic, 6);
  TypeCountMatrix m = type_count_matrix(f2, form, 3);
  SubspaceEnum lines(f2, 6, 2);
  std::array<uint64_t, 4> line_count{0, 0, 0, 0};
  for (uint64_t i = 0; i < lines.total(); ++i)
    ++line_count[int(classify_line(f2, form, lines.unrank(i)))];
  CHECK(line_count[0] + line_count[1] + line_count[2] + line_count[3] == 651);
  // sum over plane types of |type| * a[type][i] = |L_i| * (planes through a line)
  uint64_t through = gaussian_binomial(4, 1, 2);
  for (int i = 0; i < 4; ++i) {
    uint64_t lhs = 0;
    for (int t = 0; t < 5; ++t) lhs += m.cells_of_type[t] * m.rows[t][i];
    CHECK(lhs == line_count[i] * through);
  }
}

TEST_CASE("geometry over extension fields") {
  // Sp(4,4): isotropic lines number (q+1)(q^2+1)
  Field f4 = Field::of_order(4);
  ClassicalForm s = standard_form(f4, FormKind::symplectic, FormSubtype::symplectic_nondegenerate, 4);
  SubspaceEnum lines(f4, 4, 2);
  uint64_t iso = 0;
  for (uint64_t i = 0; i < lines.total(); ++i)
    iso += classify_symplectic_line(f4, s, lines.unrank(i)) == SympLineType::isotropic;
  CHECK(iso == 85);  // (q+1)(q^2+1) at q=4
  // O^-(4,8): q^2+1 singular points
  Field f8 = Field::of_order(8);
  ClassicalForm e = standard_form(f8, FormKind::quadratic, FormSubtype::elliptic, 4);
  CHECK(singular_point_count(f8, e, full_space(f8, 4)) == 65);
  CHECK(detect_quadratic_subtype(f8, e) == FormSubtype::elliptic);
  // O^-(4,9)
  Field f9 = Field::of_order(9);
  ClassicalForm e9 = standard_form(f9, FormKind::quadratic, FormSubtype::elliptic, 4);
  CHECK(singular_point_count(f9, e9, full_space(f9, 4)) == 82);
}

TEST_CASE("classify_subspace_name spot checks") {
  Field f2 = Field::of_order(2);
  ClassicalForm e6 = standard_form(f2, FormKind::quadratic, FormSubtype::elliptic, 6);
  // the head block of the elliptic form is the irreducible binary
  // quadratic, so <e1,e2> is an exterior line
  Mat l(2, 6);
  l.at(0, 0) = 1;
  l.at(1, 1) = 1;
  CHECK(classify_subspace_name(f2, e6, span_of(f2, l)) == "exterior");
  ClassicalForm h6 = standard_form(f2, FormKind::quadratic, FormSubtype::hyperbolic, 6);
  Mat t(2, 6);
  t.at(0, 0) = 1;
  t.at(1, 2) = 1;
  CHECK(classify_subspace_name(f2, h6, span_of(f2, t)) == "totally-singular");
}
