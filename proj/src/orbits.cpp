#include "gdl/orbits.hpp"

#include <algorithm>
#include <numeric>

namespace gdl {

bool is_invertible(const Field& f, const Mat& m) {
  if (m.rows != m.cols) return false;
  Mat copy = m;
  return rref(f, copy) == m.rows;
}

Subspace apply_map(const Field& f, const SemilinearMap& g, const Subspace& s) {
  Mat rows = s.basis;
  for (int step = 0; step < g.frob; ++step)
    for (auto& x : rows.a) x = f.frobenius(x);
  return span_of(f, mat_mul(f, rows, g.matrix));
}

SemilinearMap compose(const Field& f, const SemilinearMap& a, const SemilinearMap& b) {
  // v -> phi_a(phi_b(v) M_b) M_a = phi_{a+b}(v) phi_a(M_b) M_a
  Mat mb = b.matrix;
  for (int step = 0; step < a.frob; ++step)
    for (auto& x : mb.a) x = f.frobenius(x);
  SemilinearMap r;
  r.matrix = mat_mul(f, mb, a.matrix);
  r.frob = (a.frob + b.frob) % f.e();
  return r;
}

bool preserves_form(const Field& f, const SemilinearMap& g, const ClassicalForm& form) {
  if (g.frob != 0) fail_usage("form preservation check supports linear maps only");
  if (form.kind == FormKind::symplectic) {
    // M G M^T == G
    Mat t(form.n, form.n);
    for (int i = 0; i < form.n; ++i)
      for (int j = 0; j < form.n; ++j) t.at(i, j) = g.matrix.at(j, i);
    Mat prod = mat_mul(f, mat_mul(f, g.matrix, form.coeff), t);
    return prod == form.coeff;
  }
  // quadratic: Q(vM) == Q(v) on all points
  Subspace full = span_of(f, identity_mat(form.n));
  bool ok = true;
  for_each_point(f, full, [&](const std::vector<Elem>& v) {
    if (!ok) return;
    std::vector<Elem> w(form.n, 0);
    for (int i = 0; i < form.n; ++i) {
      if (v[i] == 0) continue;
      for (int j = 0; j < form.n; ++j) w[j] = f.add(w[j], f.mul(v[i], g.matrix.at(i, j)));
    }
    if (quad_eval(f, form, w) != quad_eval(f, form, v)) ok = false;
  });
  return ok;
}

std::vector<SemilinearMap> symplectic_transvection_generators(const Field& f, int n) {
  if (n % 2) fail_usage("symplectic transvections need even dimension");
  ClassicalForm sigma =
      standard_form(f, FormKind::symplectic, FormSubtype::symplectic_nondegenerate, n);
  std::vector<SemilinearMap> gens;
  Subspace full = span_of(f, identity_mat(n));
  for_each_point(f, full, [&](const std::vector<Elem>& v) {
    SemilinearMap g;
    g.frob = 0;
    g.matrix = Mat(n, n);
    for (int i = 0; i < n; ++i) {
      std::vector<Elem> ei(n, 0);
      ei[i] = 1;
      Elem c = bilinear_eval(f, sigma, ei, v);
      for (int j = 0; j < n; ++j) g.matrix.at(i, j) = f.add(i == j ? 1 : 0, f.mul(c, v[j]));
    }
    if (!preserves_form(f, g, sigma)) fail_internal("transvection does not preserve the form");
    gens.push_back(std::move(g));
  });
  return gens;
}

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(uint64_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // smaller index wins: deterministic orbit order
  }
};

}  // namespace

OrbitDecomposition orbit_decomposition(const Field& f, int n,
                                       const std::vector<SemilinearMap>& gens, int m,
                                       uint64_t cap) {
  for (const SemilinearMap& g : gens) {
    if (g.matrix.rows != n || g.matrix.cols != n) fail_usage("generator has the wrong shape");
    if (!is_invertible(f, g.matrix)) fail_usage("generator matrix is singular");
    if (g.frob < 0 || g.frob >= f.e()) fail_usage("Frobenius power out of range");
  }
  SubspaceEnum e(f, n, m, cap);
  UnionFind uf(e.total());
  for (uint64_t i = 0; i < e.total(); ++i) {
    Subspace s = e.unrank(i);
    for (const SemilinearMap& g : gens)
      uf.unite(uint32_t(i), uint32_t(e.rank(apply_map(f, g, s))));
  }
  std::vector<std::vector<uint32_t>> by_root(e.total());
  for (uint64_t i = 0; i < e.total(); ++i) by_root[uf.find(uint32_t(i))].push_back(uint32_t(i));
  OrbitDecomposition out;
  out.m = m;
  for (auto& orbit : by_root)
    if (!orbit.empty()) out.orbits.push_back(std::move(orbit));
  return out;
}

BlockCheck block_equality_check(const Field& f, int n, const std::vector<SemilinearMap>& gens,
                                int d, int k, bool certify_orbits) {
  if (!(d <= k && d <= n - k))
    fail_usage("orbit comparison requires d <= k and d <= n-k (full row rank regime)");
  BlockCheck out;
  OrbitDecomposition od = orbit_decomposition(f, n, gens, d);
  OrbitDecomposition ok = orbit_decomposition(f, n, gens, k);
  out.s = od.orbits.size();
  out.t = ok.orbits.size();
  out.equal = out.s == out.t;
  if (out.s > out.t) fail_internal("orbit counts violate the incidence rank bound");
  if (out.equal && certify_orbits) {
    SubspaceEnum e(f, n, k);
    for (const auto& orbit : ok.orbits) {
      Family fam;
      fam.field = f.spec();
      fam.n = n;
      fam.k = k;
      fam.bits = Bitset(e.total());
      for (uint32_t i : orbit) fam.bits.set(i);
      fam.construction = "orbit";
      out.orbit_verdicts.push_back(degree_test(f, fam, d));
    }
  }
  return out;
}

std::vector<Family> orbit_union_search(const Field& f, int n,
                                       const std::vector<SemilinearMap>& gens, int d, int k,
                                       int max_orbits) {
  OrbitDecomposition ok = orbit_decomposition(f, n, gens, k);
  int t = int(ok.orbits.size());
  if (t > max_orbits)
    fail_usage("group has " + std::to_string(t) +
               " k-space orbits, above the union-search limit; use a larger group");
  SubspaceEnum e(f, n, k);
  std::vector<Family> found;
  for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << t); ++mask) {
    Family fam;
    fam.field = f.spec();
    fam.n = n;
    fam.k = k;
    fam.bits = Bitset(e.total());
    std::vector<int> picked;
    std::vector<uint64_t> sizes;
    for (int i = 0; i < t; ++i) {
      if (!((mask >> i) & 1)) continue;
      picked.push_back(i);
      sizes.push_back(ok.orbits[i].size());
      for (uint32_t x : ok.orbits[i]) fam.bits.set(x);
    }
    DegreeVerdict v = degree_test(f, fam, d);
    if (!v.certified) continue;
    fam.construction = "orbit-union";
    fam.params = {{"orbits", picked}, {"orbit_sizes", sizes}, {"degree", d}};
    fam.cert = std::move(v.certificate);
    found.push_back(std::move(fam));
  }
  std::sort(found.begin(), found.end(), [](const Family& x, const Family& y) {
    uint64_t sx = x.size(), sy = y.size();
    if (sx != sy) return sx < sy;
    return x.params["orbits"] < y.params["orbits"];
  });
  return found;
}

}  // namespace gdl
