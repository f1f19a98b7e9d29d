#include "gdl/subspace.hpp"

#include <algorithm>

namespace gdl {

Mat identity_mat(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Field& f, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) fail_internal("mat_mul: shape mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int t = 0; t < x.cols; ++t) {
      Elem v = x.at(i, t);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(v, y.at(t, j)));
    }
  return r;
}

int rref(const Field& f, Mat& m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    Elem inv = f.inv(m.at(rank, col));
    if (inv != 1)
      for (int j = col; j < m.cols; ++j) m.at(rank, j) = f.mul(inv, m.at(rank, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank) continue;
      Elem c = m.at(i, col);
      if (c == 0) continue;
      for (int j = col; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(rank, j)));
    }
    ++rank;
  }
  m.a.resize(size_t(rank) * m.cols);
  m.rows = rank;
  return rank;
}

uint64_t hash_value(const Subspace& s) {
  uint64_t h = fnv1a(&s.n, sizeof s.n);
  h = fnv1a(&s.basis.rows, sizeof s.basis.rows, h);
  if (!s.basis.a.empty()) h = fnv1a(s.basis.a.data(), s.basis.a.size() * sizeof(Elem), h);
  return h;
}

Subspace span_of(const Field& f, Mat rows) {
  Subspace s;
  s.n = rows.cols;
  rref(f, rows);
  s.basis = std::move(rows);
  return s;
}

Subspace span_of_vectors(const Field& f, int n, const std::vector<std::vector<Elem>>& rows) {
  Mat m(int(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != n) fail_usage("vector length does not match ambient dimension");
    for (int j = 0; j < n; ++j) m.at(int(i), j) = rows[i][j];
  }
  return span_of(f, m);
}

bool contains_vector(const Field& f, const Subspace& s, const std::vector<Elem>& v) {
  std::vector<Elem> w = v;
  for (int i = 0; i < s.dim(); ++i) {
    int piv = -1;
    for (int j = 0; j < s.n; ++j)
      if (s.basis.at(i, j) != 0) {
        piv = j;
        break;
      }
    Elem c = w[piv];
    if (c == 0) continue;
    for (int j = piv; j < s.n; ++j) w[j] = f.sub(w[j], f.mul(c, s.basis.at(i, j)));
  }
  for (Elem x : w)
    if (x != 0) return false;
  return true;
}

bool contains(const Field& f, const Subspace& outer, const Subspace& inner) {
  if (outer.n != inner.n) fail_usage("ambient dimension mismatch");
  if (inner.dim() > outer.dim()) return false;
  for (int i = 0; i < inner.dim(); ++i) {
    std::vector<Elem> v(inner.n);
    for (int j = 0; j < inner.n; ++j) v[j] = inner.basis.at(i, j);
    if (!contains_vector(f, outer, v)) return false;
  }
  return true;
}

std::pair<Subspace, Subspace> meet_join(const Field& f, const Subspace& s, const Subspace& t) {
  if (s.n != t.n) fail_usage("ambient dimension mismatch");
  int n = s.n;
  // Zassenhaus: eliminate [S|S; T|0]; zero-left rows carry the intersection.
  Mat z(s.dim() + t.dim(), 2 * n);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      z.at(i, j) = s.basis.at(i, j);
      z.at(i, n + j) = s.basis.at(i, j);
    }
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < n; ++j) z.at(s.dim() + i, j) = t.basis.at(i, j);
  rref(f, z);
  Mat jn(0, n), mt(0, n);
  for (int i = 0; i < z.rows; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j) left_zero = (z.at(i, j) == 0);
    Mat& dst = left_zero ? mt : jn;
    dst.a.resize(size_t(dst.rows + 1) * n);
    ++dst.rows;
    for (int j = 0; j < n; ++j) dst.at(dst.rows - 1, j) = z.at(i, left_zero ? n + j : j);
  }
  return {span_of(f, std::move(mt)), span_of(f, std::move(jn))};
}

Subspace meet(const Field& f, const Subspace& s, const Subspace& t) {
  return meet_join(f, s, t).first;
}
Subspace join(const Field& f, const Subspace& s, const Subspace& t) {
  return meet_join(f, s, t).second;
}
int meet_dim(const Field& f, const Subspace& s, const Subspace& t) {
  // dim(meet) = dim S + dim T - dim(join); join alone needs one elimination
  Mat z(s.dim() + t.dim(), s.n);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.n; ++j) z.at(i, j) = s.basis.at(i, j);
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.n; ++j) z.at(s.dim() + i, j) = t.basis.at(i, j);
  int dj = rref(f, z);
  return s.dim() + t.dim() - dj;
}

Subspace dual_space(const Field& f, const Subspace& s) {
  // kernel of the basis matrix: free-column vectors of the RREF
  int n = s.n, k = s.dim();
  std::vector<int> pivots(k);
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j)
      if (s.basis.at(i, j) != 0) {
        pivots[i] = j;
        is_pivot[j] = true;
        break;
      }
  }
  Mat ker(n - k, n);
  int r = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    ker.at(r, c) = 1;
    for (int i = 0; i < k; ++i) ker.at(r, pivots[i]) = f.neg(s.basis.at(i, c));
    ++r;
  }
  return span_of(f, std::move(ker));
}

Subspace quotient_space(const Field& f, const Subspace& s, const Subspace& p) {
  if (p.dim() != 1) fail_usage("quotient requires a 1-space");
  if (!contains(f, s, p)) fail_usage("quotient point does not lie in the subspace");
  int n = s.n;
  int c = 0;
  while (p.basis.at(0, c) == 0) ++c;
  Mat red(s.dim(), n - 1);
  for (int i = 0; i < s.dim(); ++i) {
    std::vector<Elem> v(n);
    for (int j = 0; j < n; ++j) v[j] = s.basis.at(i, j);
    Elem coef = v[c];
    if (coef != 0)
      for (int j = 0; j < n; ++j) v[j] = f.sub(v[j], f.mul(coef, p.basis.at(0, j)));
    int jj = 0;
    for (int j = 0; j < n; ++j)
      if (j != c) red.at(i, jj++) = v[j];
  }
  return span_of(f, std::move(red));
}

Subspace restrict_to_hyperplane(const Field& f, const Subspace& s, const Subspace& h) {
  if (h.dim() != h.n - 1) fail_usage("restriction target must be a hyperplane");
  if (!contains(f, h, s)) fail_usage("subspace does not lie in the hyperplane");
  std::vector<int> pivots(h.dim());
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.n; ++j)
      if (h.basis.at(i, j) != 0) {
        pivots[i] = j;
        break;
      }
  Mat m(s.dim(), h.dim());
  for (int i = 0; i < s.dim(); ++i)
    for (int t = 0; t < h.dim(); ++t) m.at(i, t) = s.basis.at(i, pivots[t]);
  return span_of(f, std::move(m));
}

Subspace map_rows(const Field& f, const Mat& local_rows, const Subspace& s) {
  return span_of(f, mat_mul(f, local_rows, s.basis));
}

uint64_t q_int(int m, int q) {
  uint64_t r = 0, pw = 1;
  for (int i = 0; i < m; ++i) {
    r += pw;
    unsigned __int128 nx = (unsigned __int128)pw * q;
    if (nx > ~uint64_t(0)) fail_resource("q_int overflow");
    pw = uint64_t(nx);
  }
  return r;
}

uint64_t gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // iteratively: Gauss(n, i+1) = Gauss(n, i) * (q^(n-i)-1)/(q^(i+1)-1),
  // integral at every step
  auto qpow_minus1 = [&](int m) -> unsigned __int128 {
    unsigned __int128 p = 1;
    for (int i = 0; i < m; ++i) p *= q;
    return p - 1;
  };
  unsigned __int128 r = 1;
  for (int i = 0; i < k; ++i) {
    unsigned __int128 num = qpow_minus1(n - i);
    unsigned __int128 den = qpow_minus1(i + 1);
    unsigned __int128 t = r * num;
    if (t / num != r) fail_resource("gaussian_binomial overflow");
    if (t % den != 0) fail_internal("gaussian_binomial: nonintegral step");
    r = t / den;
  }
  if (r > ~uint64_t(0)) fail_resource("gaussian_binomial overflow");
  return uint64_t(r);
}

int64_t eigenvalue_grassmann(int j, int n, int k, int q) {
  int64_t qp = 1;
  for (int i = 0; i < j + 1; ++i) qp *= q;
  return qp * int64_t(q_int(k - j, q)) * int64_t(q_int(n - k - j, q)) - int64_t(q_int(j, q));
}

SubspaceEnum::SubspaceEnum(const Field& f, int n, int k, uint64_t cap)
    : field_(f), n_(n), k_(k) {
  if (k < 0 || k > n) fail_usage("subspace dimension out of range");
  int q = field_.q();
  total_ = gaussian_binomial(n, k, q);
  if (total_ > cap)
    fail_resource("enumeration of " + std::to_string(total_) + " subspaces exceeds cap " +
                  std::to_string(cap));
  // pivot sets in lex order with free-cell counts
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  uint64_t acc = 0;
  while (true) {
    pivot_sets_.push_back(comb);
    offsets_.push_back(acc);
    int free_cells = 0;
    for (int i = 0; i < k; ++i) free_cells += n - comb[i] - (k - i);
    uint64_t cnt = 1;
    for (int i = 0; i < free_cells; ++i) cnt *= q;
    acc += cnt;
    // next combination
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  if (k == 0) {
    pivot_sets_.assign(1, {});
    offsets_.assign(1, 0);
    acc = 1;
  }
  if (acc != total_) fail_internal("enumeration count mismatch vs Gaussian coefficient");
}

Subspace SubspaceEnum::unrank(uint64_t idx) const {
  if (idx >= total_) fail_usage("subspace rank out of range");
  size_t lo = 0, hi = offsets_.size();
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (offsets_[mid] <= idx)
      lo = mid;
    else
      hi = mid;
  }
  const std::vector<int>& piv = pivot_sets_[lo];
  uint64_t local = idx - offsets_[lo];
  std::vector<bool> is_pivot(n_, false);
  for (int c : piv) is_pivot[c] = true;
  // cells in row-major scan order
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < k_; ++i)
    for (int j = piv[i] + 1; j < n_; ++j)
      if (!is_pivot[j]) cells.emplace_back(i, j);
  Subspace s;
  s.n = n_;
  s.basis = Mat(k_, n_);
  for (int i = 0; i < k_; ++i) s.basis.at(i, piv[i]) = 1;
  int q = field_.q();
  for (size_t t = cells.size(); t-- > 0;) {
    s.basis.at(cells[t].first, cells[t].second) = Elem(local % q);
    local /= q;
  }
  return s;
}

uint64_t SubspaceEnum::rank(const Subspace& s) const {
  if (s.n != n_ || s.dim() != k_) fail_usage("subspace does not belong to this enumeration");
  std::vector<int> piv(k_);
  for (int i = 0; i < k_; ++i) {
    int j = 0;
    while (j < n_ && s.basis.at(i, j) == 0) ++j;
    piv[i] = j;
  }
  size_t lo = 0, hi = pivot_sets_.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (pivot_sets_[mid] < piv)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo >= pivot_sets_.size() || pivot_sets_[lo] != piv)
    fail_internal("pivot set not found (basis not in RREF?)");
  std::vector<bool> is_pivot(n_, false);
  for (int c : piv) is_pivot[c] = true;
  uint64_t local = 0;
  int q = field_.q();
  for (int i = 0; i < k_; ++i)
    for (int j = piv[i] + 1; j < n_; ++j)
      if (!is_pivot[j]) local = local * q + s.basis.at(i, j);
  return offsets_[lo] + local;
}

void SubspaceEnum::for_each(const std::function<void(uint64_t, const Subspace&)>& fn) const {
  for (uint64_t i = 0; i < total_; ++i) fn(i, unrank(i));
}

void for_each_point(const Field& f, const Subspace& s,
                    const std::function<void(const std::vector<Elem>&)>& fn) {
  int k = s.dim(), n = s.n, q = f.q();
  std::vector<Elem> coef(k, 0), v(n);
  // normalized: first nonzero coefficient is 1
  for (int lead = 0; lead < k; ++lead) {
    coef.assign(k, 0);
    coef[lead] = 1;
    uint64_t rest = 1;
    for (int i = lead + 1; i < k; ++i) rest *= q;
    for (uint64_t c = 0; c < rest; ++c) {
      uint64_t v2 = c;
      for (int i = k - 1; i > lead; --i) {
        coef[i] = Elem(v2 % q);
        v2 /= q;
      }
      std::fill(v.begin(), v.end(), 0);
      for (int i = lead; i < k; ++i) {
        if (coef[i] == 0) continue;
        for (int j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(coef[i], s.basis.at(i, j)));
      }
      fn(v);
    }
  }
}

void for_each_subspace_of(const Field& f, const Subspace& s, int d,
                          const std::function<void(const Subspace&)>& fn) {
  SubspaceEnum local(f, s.dim(), d);
  for (uint64_t i = 0; i < local.total(); ++i) fn(map_rows(f, local.unrank(i).basis, s));
}

void for_each_neighbor(const Field& f, const Subspace& s,
                       const std::function<void(const Subspace&)>& fn) {
  int n = s.n, k = s.dim(), q = f.q();
  if (k == 0 || k == n) return;
  SubspaceEnum walls(f, k, k - 1);
  for (uint64_t wi = 0; wi < walls.total(); ++wi) {
    Subspace w = map_rows(f, walls.unrank(wi).basis, s);
    // points of V/W, lifted: vectors supported on non-pivot columns of W,
    // first nonzero = 1; each neighbor T >= W arises exactly once
    std::vector<int> free_cols;
    {
      std::vector<bool> is_pivot(n, false);
      for (int i = 0; i < w.dim(); ++i)
        for (int j = 0; j < n; ++j)
          if (w.basis.at(i, j) != 0) {
            is_pivot[j] = true;
            break;
          }
      for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    }
    int m = int(free_cols.size());  // n - k + 1
    std::vector<Elem> x(n);
    for (int lead = 0; lead < m; ++lead) {
      uint64_t rest = 1;
      for (int i = lead + 1; i < m; ++i) rest *= q;
      for (uint64_t c = 0; c < rest; ++c) {
        std::fill(x.begin(), x.end(), 0);
        x[free_cols[lead]] = 1;
        uint64_t v2 = c;
        for (int i = m - 1; i > lead; --i) {
          x[free_cols[i]] = Elem(v2 % q);
          v2 /= q;
        }
        if (contains_vector(f, s, x)) continue;  // would rebuild s itself
        Mat stack(k, n);
        for (int i = 0; i < k - 1; ++i)
          for (int j = 0; j < n; ++j) stack.at(i, j) = w.basis.at(i, j);
        for (int j = 0; j < n; ++j) stack.at(k - 1, j) = x[j];
        fn(span_of(f, std::move(stack)));
      }
    }
  }
}

IncidenceMatrix incidence_matrix(const Field& f, int d, int k, int n) {
  if (!(0 <= d && d <= k && k <= n)) fail_usage("incidence_matrix requires 0 <= d <= k <= n");
  IncidenceMatrix m;
  m.d = d;
  m.k = k;
  m.n = n;
  m.q = f.q();
  SubspaceEnum drows(f, n, d), kcols(f, n, k);
  m.rows = drows.total();
  m.cols = kcols.total();
  m.row_support.assign(m.rows, {});
  kcols.for_each([&](uint64_t ci, const Subspace& s) {
    for_each_subspace_of(f, s, d, [&](const Subspace& dd) {
      m.row_support[drows.rank(dd)].push_back(uint32_t(ci));
    });
  });
  return m;
}

uint64_t incidence_rational_rank(const IncidenceMatrix& m) {
  RatMat a(m.rows, RatVec(m.cols, Rat(0)));
  for (uint64_t i = 0; i < m.rows; ++i)
    for (uint32_t c : m.row_support[i]) a[i][c] = 1;
  return rational_rank(std::move(a));
}

}  // namespace gdl
