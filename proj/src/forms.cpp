#include "gdl/forms.hpp"

#include <map>
#include <mutex>

namespace gdl {

std::string subtype_name(FormSubtype t) {
  switch (t) {
    case FormSubtype::symplectic_nondegenerate: return "symplectic";
    case FormSubtype::parabolic: return "parabolic";
    case FormSubtype::hyperbolic: return "hyperbolic";
    case FormSubtype::elliptic: return "elliptic";
    case FormSubtype::degenerate: return "degenerate";
  }
  return "?";
}

FormSubtype subtype_from_name(const std::string& s) {
  if (s == "symplectic") return FormSubtype::symplectic_nondegenerate;
  if (s == "parabolic") return FormSubtype::parabolic;
  if (s == "hyperbolic") return FormSubtype::hyperbolic;
  if (s == "elliptic") return FormSubtype::elliptic;
  if (s == "degenerate") return FormSubtype::degenerate;
  fail_usage("unknown form subtype '" + s + "'");
}

ClassicalForm standard_form(const Field& f, FormKind kind, FormSubtype subtype, int n) {
  ClassicalForm form;
  form.kind = kind;
  form.subtype = subtype;
  form.n = n;
  form.coeff = Mat(n, n);
  if (kind == FormKind::symplectic) {
    if (subtype != FormSubtype::symplectic_nondegenerate)
      fail_usage("symplectic forms carry the symplectic subtype");
    if (n % 2) fail_usage("nondegenerate symplectic forms need even dimension");
    for (int i = 0; i + 1 < n; i += 2) {
      form.coeff.at(i, i + 1) = 1;
      form.coeff.at(i + 1, i) = f.neg(1);
    }
    return form;
  }
  switch (subtype) {
    case FormSubtype::hyperbolic:
      if (n % 2) fail_usage("hyperbolic forms need even dimension");
      for (int i = 0; i + 1 < n; i += 2) form.coeff.at(i, i + 1) = 1;
      break;
    case FormSubtype::elliptic: {
      if (n % 2) fail_usage("elliptic forms need even dimension");
      auto [alpha, beta] = find_irreducible_quadratic(f);
      form.coeff.at(0, 0) = 1;
      form.coeff.at(0, 1) = alpha;
      form.coeff.at(1, 1) = beta;
      for (int i = 2; i + 1 < n; i += 2) form.coeff.at(i, i + 1) = 1;
      break;
    }
    case FormSubtype::parabolic:
      if (n % 2 == 0) fail_usage("parabolic forms need odd dimension");
      form.coeff.at(0, 0) = 1;
      for (int i = 1; i + 1 < n; i += 2) form.coeff.at(i, i + 1) = 1;
      break;
    default:
      fail_usage("unsupported quadratic subtype for standard_form");
  }
  return form;
}

Elem quad_eval(const Field& f, const ClassicalForm& form, const std::vector<Elem>& v) {
  if (form.kind != FormKind::quadratic) fail_usage("quad_eval needs a quadratic form");
  Elem r = 0;
  for (int i = 0; i < form.n; ++i) {
    if (v[i] == 0) continue;
    for (int j = i; j < form.n; ++j) {
      Elem c = form.coeff.at(i, j);
      if (c == 0 || v[j] == 0) continue;
      r = f.add(r, f.mul(c, f.mul(v[i], v[j])));
    }
  }
  return r;
}

Elem bilinear_eval(const Field& f, const ClassicalForm& form, const std::vector<Elem>& x,
                   const std::vector<Elem>& y) {
  // symplectic: x G y^T; quadratic: x (C + C^T) y^T, the polar form
  Elem r = 0;
  for (int i = 0; i < form.n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < form.n; ++j) {
      if (y[j] == 0) continue;
      Elem g = form.kind == FormKind::symplectic
                   ? form.coeff.at(i, j)
                   : f.add(form.coeff.at(i, j), form.coeff.at(j, i));
      if (g == 0) continue;
      r = f.add(r, f.mul(f.mul(x[i], g), y[j]));
    }
  }
  return r;
}

Subspace perp(const Field& f, const ClassicalForm& form, const Subspace& s) {
  if (s.n != form.n) fail_usage("ambient dimension mismatch");
  // perp = kernel of x -> (B(s_i, x))_i
  int k = s.dim(), n = s.n;
  Mat m(k, n);
  for (int i = 0; i < k; ++i) {
    std::vector<Elem> out(n, 0);
    for (int t = 0; t < n; ++t) {
      Elem xi = s.basis.at(i, t);
      if (xi == 0) continue;
      for (int j = 0; j < n; ++j) {
        Elem g = form.kind == FormKind::symplectic
                     ? form.coeff.at(t, j)
                     : f.add(form.coeff.at(t, j), form.coeff.at(j, t));
        if (g == 0) continue;
        out[j] = f.add(out[j], f.mul(xi, g));
      }
    }
    for (int j = 0; j < n; ++j) m.at(i, j) = out[j];
  }
  rref(f, m);
  int rank = m.rows;
  std::vector<int> pivots(rank);
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) != 0) {
        pivots[i] = j;
        is_pivot[j] = true;
        break;
      }
  Mat ker(n - rank, n);
  int r = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    ker.at(r, c) = 1;
    for (int i = 0; i < rank; ++i) ker.at(r, pivots[i]) = f.neg(m.at(i, c));
    ++r;
  }
  return span_of(f, std::move(ker));
}

std::pair<Subspace, Subspace> perp_radical(const Field& f, const ClassicalForm& form,
                                           const Subspace& s) {
  Subspace sp = perp(f, form, s);
  return {sp, meet(f, s, sp)};
}

const LocalGeometry& local_geometry(const Field& f, int dim) {
  static std::map<std::pair<int, int>, LocalGeometry> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(f.q(), dim);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  LocalGeometry g;
  Subspace full = span_of(f, identity_mat(dim));
  std::map<std::vector<Elem>, uint32_t> index;
  for_each_point(f, full, [&](const std::vector<Elem>& v) {
    index.emplace(v, uint32_t(g.points.size()));
    g.points.push_back(v);
  });
  SubspaceEnum lines(f, dim, 2);
  g.line_points.resize(lines.total());
  for (uint64_t li = 0; li < lines.total(); ++li) {
    Subspace line = lines.unrank(li);
    // points of the line in full-space coordinates
    for_each_point(f, line, [&](const std::vector<Elem>& v) {
      g.line_points[li].push_back(index.at(v));
    });
  }
  return cache.emplace(key, std::move(g)).first->second;
}

namespace {

// singular flags for the points of s, in local_geometry order
std::vector<char> singular_flags(const Field& f, const ClassicalForm& form, const Subspace& s) {
  const LocalGeometry& g = local_geometry(f, s.dim());
  std::vector<char> flags(g.points.size());
  std::vector<Elem> v(s.n);
  for (size_t pi = 0; pi < g.points.size(); ++pi) {
    const auto& c = g.points[pi];
    std::fill(v.begin(), v.end(), 0);
    for (int i = 0; i < s.dim(); ++i) {
      if (c[i] == 0) continue;
      for (int j = 0; j < s.n; ++j) v[j] = f.add(v[j], f.mul(c[i], s.basis.at(i, j)));
    }
    flags[pi] = (quad_eval(f, form, v) == 0);
  }
  return flags;
}

uint64_t count_true(const std::vector<char>& flags) {
  uint64_t c = 0;
  for (char x : flags) c += x;
  return c;
}

uint64_t ts_lines_from_flags(const Field& f, const std::vector<char>& flags, int dim) {
  const LocalGeometry& g = local_geometry(f, dim);
  uint64_t t = 0;
  for (const auto& lp : g.line_points) {
    bool all = true;
    for (uint32_t pi : lp)
      if (!flags[pi]) {
        all = false;
        break;
      }
    t += all;
  }
  return t;
}

int plane_type_from(const Field& f, uint64_t pts, uint64_t tsl) {
  uint64_t Q = f.q();
  if (pts == Q * Q + Q + 1) return 0;
  if (pts == Q + 1 && tsl == 1) return 1;
  if (pts == 1) return 2;
  if (pts == 2 * Q + 1) return 3;
  if (pts == Q + 1) return 4;
  fail_internal("plane with impossible singular configuration");
}

int solid_type_from(const Field& f, uint64_t pts, uint64_t tsl) {
  uint64_t Q = f.q();
  if (pts == Q * Q + Q + 1 && tsl == Q * Q + Q + 1) return 0;
  if (pts == 2 * Q * Q + Q + 1) return 1;
  if (pts == Q + 1) return 2;
  if (pts == Q * Q + Q + 1 && tsl == Q + 1) return 3;
  if (pts == (Q + 1) * (Q + 1)) return 4;
  if (pts == Q * Q + 1) return 5;
  fail_internal("solid with impossible singular configuration");
}

}  // namespace

uint64_t singular_point_count(const Field& f, const ClassicalForm& form, const Subspace& s) {
  return count_true(singular_flags(f, form, s));
}

uint64_t totally_singular_line_count(const Field& f, const ClassicalForm& form,
                                     const Subspace& s) {
  return ts_lines_from_flags(f, singular_flags(f, form, s), s.dim());
}

FormSubtype detect_quadratic_subtype(const Field& f, const ClassicalForm& form) {
  if (form.kind != FormKind::quadratic) fail_usage("detect needs a quadratic form");
  int n = form.n, q = f.q();
  Subspace full = span_of(f, identity_mat(n));
  // degenerate iff some singular point is orthogonal to the whole space
  Subspace rad = perp(f, form, full);
  bool deg = false;
  if (rad.dim() > 0)
    for_each_point(f, rad, [&](const std::vector<Elem>& v) {
      if (quad_eval(f, form, v) == 0) deg = true;
    });
  if (deg) return FormSubtype::degenerate;
  uint64_t s = singular_point_count(f, form, full);
  if (n % 2 == 1) {
    if (s == q_int(n - 1, q)) return FormSubtype::parabolic;
    fail_internal("nondegenerate odd-dimensional form with unexpected point count");
  }
  int m = n / 2;
  uint64_t pw = 1;
  for (int i = 0; i < m - 1; ++i) pw *= q;  // q^(m-1)
  if (s == (pw + 1) * q_int(m, q)) return FormSubtype::hyperbolic;
  if (s == (pw * q + 1) * q_int(m - 1, q)) return FormSubtype::elliptic;
  fail_internal("nondegenerate even-dimensional form with unexpected point count");
}

LineType classify_line(const Field& f, const ClassicalForm& form, const Subspace& s) {
  if (s.dim() != 2) fail_usage("classify_line needs a 2-space");
  uint64_t c = singular_point_count(f, form, s);
  if (c == 0) return LineType::exterior;
  if (c == 1) return LineType::tangent;
  if (c == 2) return LineType::secant;
  if (c == uint64_t(f.q()) + 1) return LineType::full;
  fail_internal("line with impossible singular point count");
}

PlaneType classify_plane(const Field& f, const ClassicalForm& form, const Subspace& s) {
  if (s.dim() != 3) fail_usage("classify_plane needs a 3-space");
  std::vector<char> flags = singular_flags(f, form, s);
  return PlaneType(plane_type_from(f, count_true(flags), ts_lines_from_flags(f, flags, 3)));
}

SolidType classify_solid(const Field& f, const ClassicalForm& form, const Subspace& s) {
  if (s.dim() != 4) fail_usage("classify_solid needs a 4-space");
  std::vector<char> flags = singular_flags(f, form, s);
  return SolidType(solid_type_from(f, count_true(flags), ts_lines_from_flags(f, flags, 4)));
}

SympLineType classify_symplectic_line(const Field& f, const ClassicalForm& form,
                                      const Subspace& s) {
  if (form.kind != FormKind::symplectic) fail_usage("symplectic form required");
  if (s.dim() != 2) fail_usage("classify_symplectic_line needs a 2-space");
  std::vector<Elem> a(s.n), b(s.n);
  for (int j = 0; j < s.n; ++j) {
    a[j] = s.basis.at(0, j);
    b[j] = s.basis.at(1, j);
  }
  return bilinear_eval(f, form, a, b) == 0 ? SympLineType::isotropic : SympLineType::nonisotropic;
}

SympPlaneType classify_symplectic_plane(const Field& f, const ClassicalForm& form,
                                        const Subspace& s) {
  if (form.kind != FormKind::symplectic) fail_usage("symplectic form required");
  if (s.dim() != 3) fail_usage("classify_symplectic_plane needs a 3-space");
  auto [sp, rad] = perp_radical(f, form, s);
  if (rad.dim() == 3) return SympPlaneType::isotropic;
  if (rad.dim() == 1) return SympPlaneType::point_radical;
  fail_internal("symplectic plane with radical of unexpected dimension");
}

std::string classify_subspace_name(const Field& f, const ClassicalForm& form, const Subspace& s) {
  if (form.kind == FormKind::symplectic) {
    if (s.dim() == 2)
      return classify_symplectic_line(f, form, s) == SympLineType::isotropic ? "isotropic"
                                                                             : "nonisotropic";
    if (s.dim() == 3)
      return classify_symplectic_plane(f, form, s) == SympPlaneType::isotropic ? "isotropic"
                                                                               : "point-radical";
    fail_usage("symplectic classification supports dimensions 2 and 3");
  }
  switch (s.dim()) {
    case 2: {
      static const char* names[] = {"exterior", "tangent", "secant", "totally-singular"};
      return names[int(classify_line(f, form, s))];
    }
    case 3: {
      static const char* names[] = {"totally-singular", "double-line", "one-point", "line-pair",
                                    "conic"};
      return names[int(classify_plane(f, form, s))];
    }
    case 4: {
      static const char* names[] = {"double-plane", "plane-pair", "one-line", "conic-cone",
                                    "hyperbolic", "elliptic"};
      return names[int(classify_solid(f, form, s))];
    }
    default:
      fail_usage("quadratic classification supports dimensions 2, 3 and 4");
  }
}

TypeCountMatrix type_count_matrix(const Field& f, const ClassicalForm& form, int cell_dim) {
  if (form.kind != FormKind::quadratic) fail_usage("type_count_matrix needs a quadratic form");
  if (cell_dim != 3 && cell_dim != 4) fail_usage("cell dimension must be 3 or 4");
  int ntypes = cell_dim == 3 ? 5 : 6;
  int q = f.q();
  SubspaceEnum cells(f, form.n, cell_dim);
  const LocalGeometry& g = local_geometry(f, cell_dim);

  TypeCountMatrix result;
  result.cell_dim = cell_dim;
  result.cells_of_type.assign(ntypes, 0);
  result.rows.assign(ntypes, {0, 0, 0, 0});
  result.occurs.assign(ntypes, false);

  struct Tally {
    std::vector<uint64_t> cells;
    std::vector<std::array<uint64_t, 4>> rows;
    std::vector<bool> seen;
    bool inconsistent = false;
    bool used = false;
  };
  std::mutex mu;
  std::vector<Tally> tallies;
  tallies.reserve(64);

  parallel_for(cells.total(), [&](uint64_t lo, uint64_t hi) {
    Tally t;
    t.used = true;
    t.cells.assign(ntypes, 0);
    t.rows.assign(ntypes, {0, 0, 0, 0});
    t.seen.assign(ntypes, false);
    std::vector<Elem> v(form.n);
    std::vector<char> flags(g.points.size());
    for (uint64_t ci = lo; ci < hi; ++ci) {
      Subspace cell = cells.unrank(ci);
      for (size_t pi = 0; pi < g.points.size(); ++pi) {
        const auto& c = g.points[pi];
        std::fill(v.begin(), v.end(), 0);
        for (int i = 0; i < cell_dim; ++i) {
          if (c[i] == 0) continue;
          for (int j = 0; j < form.n; ++j) v[j] = f.add(v[j], f.mul(c[i], cell.basis.at(i, j)));
        }
        flags[pi] = (quad_eval(f, form, v) == 0);
      }
      std::array<uint64_t, 4> profile{0, 0, 0, 0};
      uint64_t tsl = 0;
      for (const auto& lp : g.line_points) {
        int sing = 0;
        for (uint32_t pi : lp) sing += flags[pi];
        if (sing > 2 && sing != q + 1) fail_internal("line with impossible singular point count");
        int lt = sing == 0 ? 0 : sing == 1 ? 1 : sing == 2 ? 2 : 3;
        tsl += (lt == 3);
        ++profile[lt];
      }
      uint64_t pts = count_true(flags);
      int type = cell_dim == 3 ? plane_type_from(f, pts, tsl) : solid_type_from(f, pts, tsl);
      if (!t.seen[type]) {
        t.seen[type] = true;
        t.rows[type] = profile;
      } else if (t.rows[type] != profile) {
        t.inconsistent = true;
      }
      ++t.cells[type];
    }
    std::lock_guard<std::mutex> lock(mu);
    tallies.push_back(std::move(t));
  });

  for (const Tally& t : tallies) {
    if (!t.used) continue;
    if (t.inconsistent) fail_internal("cells of one type with different line profiles");
    for (int ty = 0; ty < ntypes; ++ty) {
      if (!t.seen[ty]) continue;
      if (result.occurs[ty] && result.rows[ty] != t.rows[ty])
        fail_internal("cells of one type with different line profiles");
      result.occurs[ty] = true;
      result.rows[ty] = t.rows[ty];
      result.cells_of_type[ty] += t.cells[ty];
    }
  }
  return result;
}

std::vector<std::array<int64_t, 4>> plane_matrix_formula(int q) {
  int64_t Q = q;
  return {
      {0, 0, 0, Q * Q + Q + 1},
      {0, Q * Q + Q, 0, 1},
      {Q * Q, Q + 1, 0, 0},
      {0, Q - 1, Q * Q, 2},
      {Q * (Q - 1) / 2, Q + 1, Q * (Q + 1) / 2, 0},
  };
}

std::vector<std::array<int64_t, 4>> solid_matrix_formula(int q) {
  int64_t Q = q;
  return {
      {0, Q * Q * (Q * Q + Q + 1), 0, Q * Q + Q + 1},
      {0, Q * (Q * Q - 1), Q * Q * Q * Q, 2 * Q * Q + 2 * Q + 1},
      {Q * Q * Q * Q, Q * (Q + 1) * (Q + 1), 0, 1},
      {Q * Q * Q * (Q - 1) / 2, Q * Q * Q + 2 * Q * Q, Q * Q * Q * (Q + 1) / 2, Q + 1},
      {Q * Q * (Q - 1) * (Q - 1) / 2, (Q + 1) * (Q * Q - 1), Q * Q * (Q + 1) * (Q + 1) / 2,
       2 * (Q + 1)},
      {Q * Q * (Q * Q + 1) / 2, (Q + 1) * (Q * Q + 1), Q * Q * (Q * Q + 1) / 2, 0},
  };
}

}  // namespace gdl
