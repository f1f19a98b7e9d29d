#include "gdl/families.hpp"

#include <algorithm>
#include <mutex>

namespace gdl {

namespace {

Subspace coordinate_span(const Field& f, int n, std::initializer_list<int> axes) {
  Mat m(int(axes.size()), n);
  int i = 0;
  for (int a : axes) m.at(i++, a) = 1;
  return span_of(f, std::move(m));
}

Subspace transformed(const Field& f, const Subspace& s, const Mat* t) {
  if (t == nullptr) return s;
  return span_of(f, mat_mul(f, s.basis, *t));
}

Subspace point_from_vector(const Field& f, int n, const std::vector<Elem>& v) {
  Mat m(1, n);
  for (int j = 0; j < n; ++j) m.at(0, j) = v[j];
  return span_of(f, std::move(m));
}

std::vector<Subspace> points_of(const Field& f, const Subspace& s) {
  std::vector<Subspace> pts;
  for_each_point(f, s, [&](const std::vector<Elem>& v) {
    pts.push_back(point_from_vector(f, s.n, v));
  });
  return pts;
}

// hyperplanes through an (n-2)-space, ordered by the points of its dual
std::vector<Subspace> hyperplanes_through(const Field& f, const Subspace& c) {
  std::vector<Subspace> hs;
  Subspace cd = dual_space(f, c);
  for_each_point(f, cd, [&](const std::vector<Elem>& v) {
    hs.push_back(dual_space(f, point_from_vector(f, c.n, v)));
  });
  return hs;
}

WeightCertificate line_type_certificate(const Field& f, int n,
                                        const std::function<int(const Subspace&)>& type_of,
                                        const std::vector<Rat>& weight_of_type) {
  WeightCertificate cert;
  cert.d = 2;
  SubspaceEnum lines(f, n, 2);
  cert.w.assign(lines.total(), Rat(0));
  for (uint64_t i = 0; i < lines.total(); ++i) cert.w[i] = weight_of_type[type_of(lines.unrank(i))];
  return cert;
}

void add_into(RatVec& acc, const RatVec& term, const Rat& scale) {
  for (size_t i = 0; i < acc.size(); ++i)
    if (term[i] != 0) acc[i] += scale * term[i];
}

}  // namespace

Family family_from_predicate(const Field& f, int n, int k, const std::string& name,
                             const std::function<bool(const Subspace&)>& member) {
  Family fam;
  fam.field = f.spec();
  fam.n = n;
  fam.k = k;
  fam.construction = name;
  SubspaceEnum e(f, n, k);
  fam.bits = Bitset(e.total());
  for (uint64_t i = 0; i < e.total(); ++i)
    if (member(e.unrank(i))) fam.bits.set(i);
  return fam;
}

Family complement_family(const Field& f, const Family& fam) {
  Family c = fam;
  c.bits = fam.bits.complement();
  c.construction = "complement-of-" + fam.construction;
  if (fam.cert) {
    Rat base = rat(1) / Rat(long(gaussian_binomial(fam.k, fam.cert->d, f.q())));
    WeightCertificate wc;
    wc.d = fam.cert->d;
    wc.w.resize(fam.cert->w.size());
    for (size_t i = 0; i < wc.w.size(); ++i) wc.w[i] = base - fam.cert->w[i];
    c.cert = std::move(wc);
  }
  return c;
}

uint64_t count_meeting_subspaces(int k, int d, int m, int j, int q) {
  // d-spaces of a k-space meeting a fixed m-space in dimension j
  if (j > m || d - j > k - m || j < 0 || j > d) return 0;
  unsigned __int128 r = (unsigned __int128)gaussian_binomial(m, j, q) *
                        gaussian_binomial(k - m, d - j, q);
  for (int i = 0; i < (m - j) * (d - j); ++i) r *= q;
  if (r > ~uint64_t(0)) fail_resource("count_meeting_subspaces overflow");
  return uint64_t(r);
}

std::optional<RatVec> meet_profile_weights(int n, int k, int d, int t, int q,
                                           const std::function<Rat(int)>& target) {
  int m_lo = std::max(0, k + t - n), m_hi = std::min(k, t);
  int j_lo = std::max(0, d + t - n), j_hi = std::min(d, t);
  RatMat A;
  RatVec b;
  for (int m = m_lo; m <= m_hi; ++m) {
    RatVec row;
    for (int j = j_lo; j <= j_hi; ++j)
      row.push_back(Rat(long(count_meeting_subspaces(k, d, m, j, q))));
    A.push_back(std::move(row));
    b.push_back(target(m));
  }
  auto sol = solve_any(std::move(A), std::move(b));
  if (!sol) return std::nullopt;
  RatVec w(t + 1, Rat(0));  // indexed by dim(D cap T)
  for (int j = j_lo; j <= j_hi; ++j) w[j] = (*sol)[j - j_lo];
  return w;
}

std::optional<uint64_t> certificate_mismatch(const Field& f, const Family& fam,
                                             const WeightCertificate& cert) {
  SubspaceEnum kenum(f, fam.n, fam.k);
  SubspaceEnum denum(f, fam.n, cert.d);
  if (cert.w.size() != denum.total()) fail_usage("certificate length mismatch");
  SubspaceEnum local(f, fam.k, cert.d);

  std::mutex mu;
  std::optional<uint64_t> first;
  parallel_for(kenum.total(), [&](uint64_t lo, uint64_t hi) {
    std::optional<uint64_t> mine;
    for (uint64_t i = lo; i < hi && !mine; ++i) {
      Subspace s = kenum.unrank(i);
      Rat sum(0);
      for (uint64_t li = 0; li < local.total(); ++li) {
        Subspace d = map_rows(f, local.unrank(li).basis, s);
        const Rat& w = cert.w[denum.rank(d)];
        if (w != 0) sum += w;
      }
      if (sum != Rat(fam.bits.get(i) ? 1 : 0)) mine = i;
    }
    if (mine) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first || *mine < *first) first = mine;
    }
  });
  return first;
}

namespace {

// profile certificate for x_T, or for a meet-profile family
WeightCertificate profile_certificate(const Field& f, int n, int k, int d, const Subspace& T,
                                      const std::function<Rat(int)>& target) {
  auto w = meet_profile_weights(n, k, d, T.dim(), f.q(), target);
  if (!w) fail_usage("no degree-" + std::to_string(d) + " profile certificate exists");
  WeightCertificate cert;
  cert.d = d;
  SubspaceEnum denum(f, n, d);
  cert.w.assign(denum.total(), Rat(0));
  for (uint64_t i = 0; i < denum.total(); ++i)
    cert.w[i] = (*w)[meet_dim(f, denum.unrank(i), T)];
  return cert;
}

WeightCertificate pencil_certificate(const Field& f, int n, int k, int d, const Subspace& T) {
  int hit = std::min(T.dim(), k);
  return profile_certificate(f, n, k, d, T,
                             [&](int m) { return Rat(m == hit ? 1 : 0); });
}

// certificate of x_P x_H (P a point inside the hyperplane H) at degree d
WeightCertificate product_certificate(const Field& f, int n, int k, int d, const Subspace& P,
                                      const Subspace& H) {
  int q = f.q();
  auto G = [&](int kk, int dd) { return Rat(long(gaussian_binomial(kk, dd, q))); };
  RatMat A;
  RatVec b;
  for (int alpha = 1; alpha >= 0; --alpha)
    for (int beta = 1; beta >= 0; --beta) {
      int m = beta ? k : k - 1;  // dim(S cap H)
      Rat c11 = alpha ? G(m - 1, d - 1) : Rat(0);
      Rat c1x = alpha ? G(k - 1, d - 1) : Rat(0);
      Rat c10 = c1x - c11;
      Rat c01 = G(m, d) - c11;
      Rat c00 = G(k, d) - c11 - c10 - c01;
      A.push_back({c11, c10, c01, c00});
      b.push_back(Rat(alpha && beta ? 1 : 0));
    }
  auto sol = solve_any(std::move(A), std::move(b));
  if (!sol) fail_internal("product certificate system is inconsistent");
  WeightCertificate cert;
  cert.d = d;
  SubspaceEnum denum(f, n, d);
  cert.w.assign(denum.total(), Rat(0));
  for (uint64_t i = 0; i < denum.total(); ++i) {
    Subspace D = denum.unrank(i);
    bool a = contains(f, D, P);
    bool h = contains(f, H, D);
    cert.w[i] = (*sol)[a ? (h ? 0 : 1) : (h ? 2 : 3)];
  }
  return cert;
}

void attach_validated(const Field& f, Family& fam, WeightCertificate cert, bool required) {
  auto bad = certificate_mismatch(f, fam, cert);
  if (!bad) {
    fam.cert = std::move(cert);
    return;
  }
  if (required)
    fail_internal("constructed certificate fails to replay at k-space rank " +
                  std::to_string(*bad));
  fam.params["certificate"] = "solver";
}

}  // namespace

Family trivial_pencil(const Field& f, int n, int k, const Subspace& T, int d) {
  if (T.n != n) fail_usage("ambient dimension mismatch");
  int t = T.dim();
  Family fam = family_from_predicate(f, n, k, "pencil", [&](const Subspace& s) {
    return t <= k ? contains(f, s, T) : contains(f, T, s);
  });
  fam.params = {{"t", t}, {"d", d}};
  attach_validated(f, fam, pencil_certificate(f, n, k, d, T), true);
  return fam;
}

Family trivial_meet_profile(const Field& f, int n, int k, const Subspace& T, int i) {
  int t = T.dim();
  if (i < 0 || i > t) fail_usage("meet profile index out of range");
  Family fam = family_from_predicate(f, n, k, "meet-profile", [&](const Subspace& s) {
    return meet_dim(f, s, T) == t - i;
  });
  fam.params = {{"t", t}, {"i", i}};
  attach_validated(f, fam,
                   profile_certificate(f, n, k, t, T,
                                       [&](int m) { return Rat(m == t - i ? 1 : 0); }),
                   true);
  return fam;
}

Family trivial_product(const Field& f, int n, int k, const Subspace& P, const Subspace& H) {
  if (P.dim() != 1 || H.dim() != n - 1) fail_usage("product needs a point and a hyperplane");
  if (!contains(f, H, P)) fail_usage("product requires the point inside the hyperplane");
  Family fam = family_from_predicate(f, n, k, "point-hyperplane-product", [&](const Subspace& s) {
    return contains(f, s, P) && contains(f, H, s);
  });
  attach_validated(f, fam, product_certificate(f, n, k, 2, P, H), true);
  return fam;
}

Family hyperplane_point_union(const Field& f, int n, int k, const Subspace& C,
                              const std::vector<Subspace>& points) {
  if (C.dim() != n - 2) fail_usage("hyperplane_point_union needs a coline");
  std::vector<Subspace> hs = hyperplanes_through(f, C);
  std::vector<Subspace> ps = points;
  if (ps.empty()) {
    for (const Subspace& h : hs) {
      bool done = false;
      for_each_point(f, h, [&](const std::vector<Elem>& v) {
        if (done) return;
        Subspace p = point_from_vector(f, n, v);
        if (!contains(f, C, p)) {
          ps.push_back(p);
          done = true;
        }
      });
    }
  }
  if (ps.size() != hs.size()) fail_usage("need one point per hyperplane through the coline");
  for (size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].dim() != 1 || !contains(f, hs[i], ps[i]) || contains(f, C, ps[i]))
      fail_usage("chosen point must lie in its hyperplane but outside the coline");
  }
  Family fam = family_from_predicate(f, n, k, "hyperplane-point-union", [&](const Subspace& s) {
    for (size_t i = 0; i < hs.size(); ++i)
      if (contains(f, s, ps[i]) && contains(f, hs[i], s)) return true;
    return false;
  });
  WeightCertificate cert;
  cert.d = 2;
  cert.w.assign(SubspaceEnum(f, n, 2).total(), Rat(0));
  for (size_t i = 0; i < hs.size(); ++i)
    add_into(cert.w, product_certificate(f, n, k, 2, ps[i], hs[i]).w, rat(1));
  attach_validated(f, fam, std::move(cert), true);
  uint64_t claim = (uint64_t(f.q()) + 1) * gaussian_binomial(n - 1, k - 1, f.q());
  fam.params["size_claim"] = claim;
  fam.params["size_claim_matches"] = (claim == fam.size());
  return fam;
}

Family spread_family(const Field& f, int n, int d, int k) {
  if (d <= 0 || n % d != 0) fail_usage("spread does not exist: d must divide n");
  if (k < d || k > 2 * d - 1) fail_usage("spread family needs d <= k <= 2d-1");
  TowerField tower(f, d);
  int m = n / d;
  int q = f.q();
  uint64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= q;

  auto decode = [&](uint64_t code) {
    std::vector<Elem> digits(d);
    for (int i = 0; i < d; ++i) {
      digits[i] = Elem(code % q);
      code /= q;
    }
    return digits;
  };
  std::vector<Elem> tgen(d, 0);  // the class of x in the tower field
  if (d == 1)
    tgen[0] = 1;
  else
    tgen[1] = 1;

  std::vector<Subspace> spread;
  for (int lead = 0; lead < m; ++lead) {
    uint64_t rest = 1;
    for (int i = lead + 1; i < m; ++i) rest *= qd;
    for (uint64_t code = 0; code < rest; ++code) {
      // projective representative over GF(q^d): lead component 1
      std::vector<std::vector<Elem>> comps(m, std::vector<Elem>(d, 0));
      comps[lead][0] = 1;
      uint64_t c = code;
      for (int i = m - 1; i > lead; --i) {
        comps[i] = decode(c % qd);
        c /= qd;
      }
      // GF(q)-basis of the GF(q^d)-line: W, tW, t^2 W, ...
      Mat basis(d, n);
      std::vector<std::vector<Elem>> scaled = comps;
      for (int row = 0; row < d; ++row) {
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < d; ++j) basis.at(row, i * d + j) = scaled[i][j];
        if (row + 1 < d)
          for (int i = 0; i < m; ++i) scaled[i] = tower.mul(scaled[i], tgen);
      }
      spread.push_back(span_of(f, std::move(basis)));
    }
  }
  uint64_t expected = q_int(n, q) / q_int(d, q);
  if (spread.size() != expected) fail_internal("spread has the wrong size");

  Family fam = family_from_predicate(f, n, k, "spread", [&](const Subspace& s) {
    for (const Subspace& w : spread)
      if (contains(f, s, w)) return true;
    return false;
  });
  fam.params = {{"d", d}, {"spread_size", spread.size()}};
  WeightCertificate cert;
  cert.d = d;
  SubspaceEnum denum(f, n, d);
  cert.w.assign(denum.total(), Rat(0));
  for (const Subspace& w : spread) cert.w[denum.rank(w)] = 1;
  attach_validated(f, fam, std::move(cert), true);
  return fam;
}

Family hypercube_lift(const Field& f, int n, int k, const CubeFunction& h,
                      const std::vector<std::vector<Elem>>& B) {
  if (int(B.size()) != h.m) fail_usage("hypercube lift needs one base vector per variable");
  Mat rows(int(B.size()), n);
  for (size_t i = 0; i < B.size(); ++i)
    for (int j = 0; j < n; ++j) rows.at(int(i), j) = B[i][j];
  if (span_of(f, rows).dim() != int(B.size()))
    fail_usage("hypercube lift needs linearly independent base vectors");
  std::vector<Subspace> pts;
  for (const auto& v : B) pts.push_back(point_from_vector(f, n, v));
  Family fam = family_from_predicate(f, n, k, "hypercube-lift", [&](const Subspace& s) {
    uint32_t x = 0;
    for (size_t i = 0; i < pts.size(); ++i)
      if (contains(f, s, pts[i])) x |= uint32_t(1) << i;
    return cube_eval(h, x);
  });
  fam.params = {{"arity", h.m}, {"degree", multilinear_degree(h)}};
  return fam;
}

Family symplectic_planes(const Field& f, int n, SympWhich which) {
  if (n < 6 || n % 2) fail_usage("symplectic plane families need even n >= 6");
  int q = f.q();
  ClassicalForm form = standard_form(f, FormKind::symplectic, FormSubtype::symplectic_nondegenerate, n);
  SympPlaneType want =
      which == SympWhich::isotropic ? SympPlaneType::isotropic : SympPlaneType::point_radical;
  Family fam = family_from_predicate(f, n, 3, "symplectic-planes", [&](const Subspace& s) {
    return classify_symplectic_plane(f, form, s) == want;
  });
  fam.params = {{"which", which == SympWhich::isotropic ? "isotropic" : "point-radical"}};
  Rat iso = rat(1) / rat(long(q_int(3, q)));
  Rat noniso = rat(-(q + 1)) / rat(long(uint64_t(q) * q * q_int(3, q)));
  WeightCertificate cert = line_type_certificate(
      f, n,
      [&](const Subspace& l) { return int(classify_symplectic_line(f, form, l)); },
      {iso, noniso});
  if (which == SympWhich::point_radical) {
    Rat base = rat(1) / rat(long(q_int(3, q)));  // Gauss(3,2) = [3]
    for (auto& w : cert.w) w = base - w;
  }
  attach_validated(f, fam, std::move(cert), true);
  return fam;
}

Family quadric_planes(const Field& f, int n, FormSubtype subtype, QuadricWhich which) {
  if (n < 6) fail_usage("quadric plane families need n >= 6");
  int q = f.q();
  if (which == QuadricWhich::f2 && q != 2) fail_usage("the f2 family exists only for q = 2");
  ClassicalForm form = standard_form(f, FormKind::quadratic, subtype, n);
  auto in_f1 = [](PlaneType t) {
    return t == PlaneType::totally_singular || t == PlaneType::double_line;
  };
  auto in_f2 = [](PlaneType t) {
    return t == PlaneType::totally_singular || t == PlaneType::one_point;
  };
  Family fam = family_from_predicate(f, n, 3, "quadric-planes", [&](const Subspace& s) {
    PlaneType t = classify_plane(f, form, s);
    return which == QuadricWhich::f1 ? in_f1(t) : in_f2(t);
  });
  fam.params = {{"subtype", subtype_name(subtype)},
                {"which", which == QuadricWhich::f1 ? "f1" : "f2"}};

  std::vector<Rat> wts(4);
  if (which == QuadricWhich::f1) {
    Rat neg = rat(-(q + 1)) / rat(long(uint64_t(q) * q * q_int(3, q)));  // -(q+1)/(q^4+q^3+q^2)
    Rat pos = rat(1) / rat(long(q_int(3, q)));
    wts = {neg, pos, neg, pos};
  } else {
    // line-class weights from the exact 5x4 system A c = [1,0,1,0,0]
    auto A = plane_matrix_formula(q);
    RatMat M;
    for (const auto& row : A) {
      RatVec r;
      for (int64_t x : row) r.push_back(Rat(long(x)));
      M.push_back(std::move(r));
    }
    RatVec target = {Rat(1), Rat(0), Rat(1), Rat(0), Rat(0)};
    auto sol = solve_any(std::move(M), std::move(target));
    if (!sol) fail_internal("no line-class weights reproduce the f2 family");
    for (int i = 0; i < 4; ++i) wts[i] = (*sol)[i];
  }
  attach_validated(f, fam,
                   line_type_certificate(
                       f, n, [&](const Subspace& l) { return int(classify_line(f, form, l)); },
                       wts),
                   true);
  return fam;
}

Family elliptic_solids(const Field& f) {
  int q = f.q();
  ClassicalForm form = standard_form(f, FormKind::quadratic, FormSubtype::elliptic, 8);
  auto wanted = [](SolidType t) {
    return t == SolidType::double_plane || t == SolidType::plane_pair || t == SolidType::one_line;
  };
  Family fam = family_from_predicate(f, 8, 4, "elliptic-solids", [&](const Subspace& s) {
    return wanted(classify_solid(f, form, s));
  });
  Rat head = rat(q + 1) / rat(long(uint64_t(q) * q * q * q_int(3, q)));
  std::vector<Rat> wts = {head, Rat(0), -head, rat(1) / rat(long(q_int(3, q)))};
  attach_validated(f, fam,
                   line_type_certificate(
                       f, 8, [&](const Subspace& l) { return int(classify_line(f, form, l)); },
                       wts),
                   true);
  return fam;
}

Mat random_gl(const Field& f, int n, uint64_t seed) {
  Rng rng(seed);
  while (true) {
    Mat m(n, n);
    for (auto& x : m.a) x = Elem(rng.below(f.q()));
    Mat copy = m;
    if (rref(f, copy) == n) return m;
  }
}

namespace {

// the coline pencil over L: lifts of a line spread of V/L (field reduction
// over GF(q^2)); pairwise meeting exactly in L
std::vector<Subspace> spread_colines(const Field& f, const Subspace& L) {
  int q = f.q();
  TowerField tower(f, 2);
  uint64_t q2 = uint64_t(q) * q;
  auto decode = [&](uint64_t code) {
    return std::vector<Elem>{Elem(code % q), Elem(code / q)};
  };
  std::vector<Elem> tgen{0, 1};
  std::vector<Subspace> colines;
  // projective points of GF(q^2)^2: (1, y) and (0, 1)
  for (int lead = 0; lead < 2; ++lead) {
    uint64_t rest = lead == 0 ? q2 : 1;
    for (uint64_t code = 0; code < rest; ++code) {
      std::vector<std::vector<Elem>> comps(2, std::vector<Elem>(2, 0));
      comps[lead][0] = 1;
      if (lead == 0) comps[1] = decode(code);
      Mat rows(2 + 2, 6);
      // L itself plus the two GF(q)-basis vectors of the spread line,
      // embedded into the quotient coordinates (the columns off L's pivots)
      std::vector<int> freecols;
      {
        std::vector<bool> piv(6, false);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 6; ++j)
            if (L.basis.at(i, j) != 0) {
              piv[j] = true;
              break;
            }
        for (int j = 0; j < 6; ++j)
          if (!piv[j]) freecols.push_back(j);
      }
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 6; ++j) rows.at(i, j) = L.basis.at(i, j);
      std::vector<std::vector<Elem>> scaled = comps;
      for (int row = 0; row < 2; ++row) {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) rows.at(2 + row, freecols[i * 2 + j]) = scaled[i][j];
        if (row == 0)
          for (int i = 0; i < 2; ++i) scaled[i] = tower.mul(scaled[i], tgen);
      }
      colines.push_back(span_of(f, std::move(rows)));
    }
  }
  return colines;
}

}  // namespace

Family line_plus_spread(const Field& f, const Mat* transform) {
  int q = f.q();
  Subspace L = transformed(f, coordinate_span(f, 6, {0, 1}), transform);
  std::vector<Subspace> colines = spread_colines(f, L);
  if (colines.size() != uint64_t(q) * q + 1) fail_internal("coline spread has the wrong size");

  Family fam = family_from_predicate(f, 6, 3, "line-plus-spread", [&](const Subspace& s) {
    if (meet_dim(f, s, L) != 1) return false;
    for (const Subspace& c : colines)
      if (contains(f, c, s)) return true;
    return false;
  });
  uint64_t formula = (uint64_t(q) * q + 1) * uint64_t(q) * q * (q + 1);
  fam.params = {{"size_formula", formula}, {"size_formula_matches", formula == fam.size()}};

  // f = sum_C x_C - x_L assembled from profile certificates
  WeightCertificate cert;
  cert.d = 2;
  cert.w.assign(SubspaceEnum(f, 6, 2).total(), Rat(0));
  for (const Subspace& c : colines) add_into(cert.w, pencil_certificate(f, 6, 3, 2, c).w, rat(1));
  add_into(cert.w, pencil_certificate(f, 6, 3, 2, L).w, rat(-1));
  attach_validated(f, fam, std::move(cert), false);
  return fam;
}

std::vector<Subspace> line_plus_spread_junta(const Field& f) {
  Subspace L = coordinate_span(f, 6, {0, 1});
  std::vector<Subspace> r = points_of(f, L);
  for (const Subspace& c : spread_colines(f, L))
    for (const Subspace& h : hyperplanes_through(f, c)) r.push_back(h);
  return r;
}

Family incident_pph(const Field& f, const Mat* transform) {
  int q = f.q();
  Subspace P = transformed(f, coordinate_span(f, 6, {0}), transform);
  Subspace Pi = transformed(f, coordinate_span(f, 6, {0, 1, 2}), transform);
  Subspace H = transformed(f, coordinate_span(f, 6, {0, 1, 2, 3, 4}), transform);

  Family fam = family_from_predicate(f, 6, 3, "incident-pph", [&](const Subspace& s) {
    bool in_h = contains(f, H, s);
    Subspace m = meet(f, s, Pi);
    if (!in_h) return m.dim() == 2 && contains(f, m, P);
    return m.dim() == 1 && !contains(f, P, m);
  });
  uint64_t formula = (uint64_t(q) * q + 1) * uint64_t(q) * q * q * (q + 1);
  fam.params = {{"size_formula", formula}, {"size_formula_matches", formula == fam.size()}};

  // eight line classes by position against the flag P < Pi < H
  Rat c1 = rat(long(uint64_t(q) * q * q)) / rat(long(q_int(3, q) * q_int(2, q)));
  Rat c23 = rat(-q) / rat(long(q_int(3, q)));
  Rat c47 = rat(1) / rat(long(q_int(3, q) * q_int(2, q)));
  Rat c56 = rat(q + 1) / rat(long(uint64_t(q) * q_int(3, q)));
  Rat c8 = rat(-1) / rat(long(uint64_t(q) * q * q_int(3, q)));
  auto line_class = [&](const Subspace& l) -> int {
    bool in_h = contains(f, H, l);
    Subspace mp = meet(f, l, Pi);
    if (mp.dim() == 2) return contains(f, l, P) ? 1 : 2;  // inside Pi
    if (in_h) {
      if (mp.dim() == 1) return contains(f, P, mp) ? 3 : 4;
      return 5;
    }
    Subspace x = meet(f, l, H);  // a point
    if (x == P) return 6;
    return contains(f, Pi, x) ? 7 : 8;
  };
  WeightCertificate cert;
  cert.d = 2;
  SubspaceEnum lines(f, 6, 2);
  cert.w.assign(lines.total(), Rat(0));
  const Rat by_class[9] = {Rat(0), c1, c23, c23, c47, c56, c56, c47, c8};
  for (uint64_t i = 0; i < lines.total(); ++i) cert.w[i] = by_class[line_class(lines.unrank(i))];
  attach_validated(f, fam, std::move(cert), true);
  return fam;
}

std::vector<Subspace> incident_pph_junta(const Field& f) {
  std::vector<Subspace> r = points_of(f, coordinate_span(f, 6, {0, 1, 2}));
  r.push_back(coordinate_span(f, 6, {0, 1, 2, 3, 4}));
  return r;
}

namespace {

struct LineSolidFlag {
  Subspace M, C;
  std::vector<Subspace> pts;  // points of M
  std::vector<Subspace> hps;  // hyperplanes through C, paired with pts
};

LineSolidFlag line_solid_flag(const Field& f, const Mat* transform) {
  LineSolidFlag fl;
  fl.M = transformed(f, coordinate_span(f, 6, {0, 1}), transform);
  fl.C = transformed(f, coordinate_span(f, 6, {0, 1, 2, 3}), transform);
  fl.pts = points_of(f, fl.M);
  fl.hps = hyperplanes_through(f, fl.C);
  if (fl.pts.size() != fl.hps.size()) fail_internal("flag has mismatched pencil sizes");
  return fl;
}

}  // namespace

Family sporadic_line_solid(const Field& f, LineSolidVariant variant, const Mat* transform) {
  if (f.q() != 2) fail_usage("this family is constructed for q = 2 only");
  LineSolidFlag fl = line_solid_flag(f, transform);
  auto in_pi1 = [&](const Subspace& s) {
    return contains(f, s, fl.M) && contains(f, fl.C, s);
  };
  auto meet_point_index = [&](const Subspace& s) -> int {
    Subspace m = meet(f, s, fl.M);
    if (m.dim() != 1) return -1;
    for (size_t i = 0; i < fl.pts.size(); ++i)
      if (fl.pts[i] == m) return int(i);
    fail_internal("point of M not found");
  };
  auto in_pi2 = [&](const Subspace& s) {
    if (contains(f, fl.C, s)) return false;
    int i = meet_point_index(s);
    return i >= 0 && contains(f, fl.hps[i], s);
  };
  auto in_pi3 = [&](const Subspace& s) {
    return meet_point_index(s) >= 0 && meet_dim(f, s, fl.C) == 2;
  };

  bool is12 = variant == LineSolidVariant::pi12;
  Family fam = family_from_predicate(
      f, 6, 3, is12 ? "sporadic-line-solid-12" : "sporadic-line-solid-13",
      [&](const Subspace& s) {
        return in_pi1(s) || (is12 ? in_pi2(s) : in_pi3(s));
      });
  int q = f.q();
  uint64_t f12 = uint64_t(q + 1) + uint64_t(q) * q * q * (q + 1) * (q + 1);
  uint64_t f13 = f12 + uint64_t(q) * q * q * (q * q + 1) * (q + 1);
  fam.params = {{"size_formula", is12 ? f12 : f13},
                {"size_formula_matches", (is12 ? f12 : f13) == fam.size()}};

  if (is12) {
    // at q = 2:  Pi1 + Pi2  =  sum_i x_{P_i} x_{H_i}  -  x_C  -  x_M
    WeightCertificate cert;
    cert.d = 2;
    cert.w.assign(SubspaceEnum(f, 6, 2).total(), Rat(0));
    for (size_t i = 0; i < fl.pts.size(); ++i)
      add_into(cert.w, product_certificate(f, 6, 3, 2, fl.pts[i], fl.hps[i]).w, rat(1));
    add_into(cert.w, pencil_certificate(f, 6, 3, 2, fl.C).w, rat(-1));
    add_into(cert.w, pencil_certificate(f, 6, 3, 2, fl.M).w, rat(-1));
    attach_validated(f, fam, std::move(cert), false);
  } else {
    fam.params["certificate"] = "solver";
  }
  return fam;
}

std::vector<Subspace> sporadic_line_solid_junta(const Field& f) {
  LineSolidFlag fl = line_solid_flag(f, nullptr);
  std::vector<Subspace> r = fl.pts;
  for (const Subspace& h : fl.hps) r.push_back(h);
  return r;
}

Family sporadic_pplh(const Field& f, const Mat* transform) {
  if (f.q() != 2) fail_usage("this family is constructed for q = 2 only");
  Subspace P = transformed(f, coordinate_span(f, 6, {0}), transform);
  Subspace M = transformed(f, coordinate_span(f, 6, {0, 1}), transform);
  Subspace Pi = transformed(f, coordinate_span(f, 6, {0, 1, 2}), transform);
  Subspace H = transformed(f, coordinate_span(f, 6, {0, 1, 2, 3, 4}), transform);

  Family fam = family_from_predicate(f, 6, 3, "sporadic-pplh", [&](const Subspace& s) {
    bool in_h = contains(f, H, s);
    if (in_h && contains(f, s, M)) return true;  // planes in H through M
    Subspace m = meet(f, s, Pi);
    if (!in_h) return m.dim() == 2 && contains(f, m, P) && m != M;
    return m.dim() == 1 && contains(f, M, m) && !contains(f, P, m);
  });
  fam.params = {{"certificate", "solver"}};
  return fam;
}

std::vector<Subspace> sporadic_pplh_junta(const Field& f) {
  // H plus a triangle of points containing the line M: vertices e1, e2, e3
  std::vector<Subspace> r;
  r.push_back(coordinate_span(f, 6, {0, 1, 2, 3, 4}));
  std::vector<std::vector<Elem>> pts = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
                                        {1, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                                        {1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0}};
  for (const auto& v : pts) r.push_back(point_from_vector(f, 6, v));
  return r;
}

Family restrict_family(const Field& f, const Family& fam, const Subspace& H) {
  if (H.dim() != fam.n - 1) fail_usage("restriction needs a hyperplane");
  SubspaceEnum src(f, fam.n, fam.k);
  SubspaceEnum dst(f, fam.n - 1, fam.k);
  Family out;
  out.field = f.spec();
  out.n = fam.n - 1;
  out.k = fam.k;
  out.bits = Bitset(dst.total());
  out.construction = "restrict-" + fam.construction;
  for (uint64_t i = 0; i < src.total(); ++i) {
    if (!fam.bits.get(i)) continue;
    Subspace s = src.unrank(i);
    if (!contains(f, H, s)) continue;
    out.bits.set(dst.rank(restrict_to_hyperplane(f, s, H)));
  }
  return out;
}

Family quotient_family(const Field& f, const Family& fam, const Subspace& P) {
  if (P.dim() != 1) fail_usage("quotient needs a point");
  if (fam.k < 1) fail_usage("quotient needs k >= 1");
  SubspaceEnum src(f, fam.n, fam.k);
  SubspaceEnum dst(f, fam.n - 1, fam.k - 1);
  Family out;
  out.field = f.spec();
  out.n = fam.n - 1;
  out.k = fam.k - 1;
  out.bits = Bitset(dst.total());
  out.construction = "quotient-" + fam.construction;
  for (uint64_t i = 0; i < src.total(); ++i) {
    if (!fam.bits.get(i)) continue;
    Subspace s = src.unrank(i);
    if (!contains(f, s, P)) continue;
    out.bits.set(dst.rank(quotient_space(f, s, P)));
  }
  return out;
}

}  // namespace gdl
