#pragma once

// Symplectic and quadratic forms on F_q^n with the classification machinery
// used by the plane and solid families: perp/radical, line types by number
// of singular points, the five plane types, the six solid types of an
// elliptic form on F_q^8, and the measured type-count matrices.
//
// Quadratic forms are stored as upper-triangular coefficient matrices, so
// everything works in characteristic 2; the associated bilinear form is
// always the polar form B(x,y) = Q(x+y) - Q(x) - Q(y), which is alternating
// in characteristic 2. Witt types of small restrictions are detected by
// exhaustive singular-point counting, never by dividing by 2.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gdl/subspace.hpp"

namespace gdl {

enum class FormKind { symplectic, quadratic };
enum class FormSubtype { symplectic_nondegenerate, parabolic, hyperbolic, elliptic, degenerate };

struct ClassicalForm {
  FormKind kind = FormKind::symplectic;
  FormSubtype subtype = FormSubtype::symplectic_nondegenerate;
  int n = 0;
  // symplectic: alternating Gram matrix; quadratic: upper-triangular
  // coefficients of Q(x) = sum_{i<=j} c_ij x_i x_j
  Mat coeff;
};

std::string subtype_name(FormSubtype t);
FormSubtype subtype_from_name(const std::string& s);

// The canonical forms:
//   symplectic (n even):  x1 y2 - x2 y1 + x3 y4 - x4 y3 + ...
//   hyperbolic (n even):  x1 x2 + x3 x4 + ...
//   elliptic   (n even):  x1^2 + a x1 x2 + b x2^2 + x3 x4 + ... ,
//                         t^2 + a t + b the least irreducible quadratic
//   parabolic  (n odd):   x1^2 + x2 x3 + x4 x5 + ...
ClassicalForm standard_form(const Field& f, FormKind kind, FormSubtype subtype, int n);

Elem quad_eval(const Field& f, const ClassicalForm& form, const std::vector<Elem>& v);
Elem bilinear_eval(const Field& f, const ClassicalForm& form, const std::vector<Elem>& x,
                   const std::vector<Elem>& y);

// {x : B(s, x) = 0 for all s in S} and S with its radical S cap S-perp.
Subspace perp(const Field& f, const ClassicalForm& form, const Subspace& s);
std::pair<Subspace, Subspace> perp_radical(const Field& f, const ClassicalForm& form,
                                           const Subspace& s);

uint64_t singular_point_count(const Field& f, const ClassicalForm& form, const Subspace& s);
uint64_t totally_singular_line_count(const Field& f, const ClassicalForm& form,
                                     const Subspace& s);

// Recompute the subtype of a quadratic form from its singular-point count
// and the radical of the polar form (degenerate = the radical of Q itself
// is nontrivial, i.e. a singular point orthogonal to everything).
FormSubtype detect_quadratic_subtype(const Field& f, const ClassicalForm& form);

// line types by number of singular points: 0, 1, 2, q+1
enum class LineType { exterior = 0, tangent = 1, secant = 2, full = 3 };
// plane types: all singular | singular set a line | one singular point |
// two totally singular lines | conic
enum class PlaneType {
  totally_singular = 0,
  double_line = 1,
  one_point = 2,
  line_pair = 3,
  conic = 4
};
// solid types of an elliptic form on F_q^8
enum class SolidType {
  double_plane = 0,
  plane_pair = 1,
  one_line = 2,
  conic_cone = 3,
  hyperbolic4 = 4,
  elliptic4 = 5
};
enum class SympLineType { isotropic = 0, nonisotropic = 1 };
enum class SympPlaneType { isotropic = 0, point_radical = 1 };

LineType classify_line(const Field& f, const ClassicalForm& form, const Subspace& s);
PlaneType classify_plane(const Field& f, const ClassicalForm& form, const Subspace& s);
SolidType classify_solid(const Field& f, const ClassicalForm& form, const Subspace& s);
SympLineType classify_symplectic_line(const Field& f, const ClassicalForm& form,
                                      const Subspace& s);
SympPlaneType classify_symplectic_plane(const Field& f, const ClassicalForm& form,
                                        const Subspace& s);

// human-readable tag for any supported (form, dim) pair, for the CLI
std::string classify_subspace_name(const Field& f, const ClassicalForm& form, const Subspace& s);

// Points and lines of F_q^dim in local coordinates, with lines as lists of
// point indices. Cached per (q, dim); shared by the classifiers.
struct LocalGeometry {
  std::vector<std::vector<Elem>> points;
  std::vector<std::vector<uint32_t>> line_points;
};
const LocalGeometry& local_geometry(const Field& f, int dim);

// Measured matrix a[cell type][line type] = number of lines of that type in
// a cell of that type, checked to be constant over every cell of the type.
struct TypeCountMatrix {
  int cell_dim = 3;
  std::vector<uint64_t> cells_of_type;            // 5 or 6 entries
  std::vector<std::array<uint64_t, 4>> rows;      // per cell type
  std::vector<bool> occurs;
};
TypeCountMatrix type_count_matrix(const Field& f, const ClassicalForm& form, int cell_dim);

// The closed-form matrices the measurements are compared against.
std::vector<std::array<int64_t, 4>> plane_matrix_formula(int q);  // 5 x 4
std::vector<std::array<int64_t, 4>> solid_matrix_formula(int q);  // 6 x 4

}  // namespace gdl
