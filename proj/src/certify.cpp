#include "gdl/certify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace gdl {

namespace {

// meet-dimension class of every pair of d-spaces, cached per (q, n, d)
struct MeetClasses {
  uint64_t count = 0;
  int d = 0;
  int m_lo = 0;  // least occurring meet dimension, max(0, 2d - n)
  std::vector<uint8_t> meet;  // count x count, meet dimension of the pair

  uint8_t at(uint64_t i, uint64_t j) const { return meet[i * count + j]; }
};

const MeetClasses& meet_classes(const Field& f, int n, int d, uint64_t cap) {
  static std::map<std::tuple<int, int, int>, MeetClasses> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(f.q(), n, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  SubspaceEnum denum(f, n, d);
  if (denum.total() > cap)
    fail_resource("degree test needs " + std::to_string(denum.total()) +
                  " rows, above the solver cap " + std::to_string(cap) +
                  "; use certificate replay instead");
  MeetClasses mc;
  mc.count = denum.total();
  mc.d = d;
  mc.m_lo = std::max(0, 2 * d - n);
  mc.meet.assign(mc.count * mc.count, 0);
  std::vector<Subspace> all(mc.count);
  for (uint64_t i = 0; i < mc.count; ++i) all[i] = denum.unrank(i);
  parallel_for(mc.count, [&](uint64_t lo, uint64_t hi) {
    for (uint64_t i = lo; i < hi; ++i) {
      mc.meet[i * mc.count + i] = uint8_t(d);
      for (uint64_t j = 0; j < i; ++j) {
        uint8_t m = uint8_t(meet_dim(f, all[i], all[j]));
        mc.meet[i * mc.count + j] = m;
        mc.meet[j * mc.count + i] = m;
      }
    }
  });
  return cache.emplace(key, std::move(mc)).first->second;
}

}  // namespace

DegreeVerdict degree_test(const Field& f, const Family& fam, int d, uint64_t solver_cap) {
  DegreeVerdict v;
  v.d = d;
  int n = fam.n, k = fam.k, q = f.q();
  if (d < 0 || d > k) fail_usage("degree must satisfy 0 <= d <= k");
  if (d > n - k) fail_usage("degree test requires d <= n-k (full row rank regime)");
  if (gaussian_binomial(n, d, q) > solver_cap)
    fail_resource("degree test needs " + std::to_string(gaussian_binomial(n, d, q)) +
                  " rows, above the solver cap " + std::to_string(solver_cap) +
                  "; use certificate replay instead");

  const MeetClasses& mc = meet_classes(f, n, d, solver_cap);
  SubspaceEnum denum(f, n, d);
  SubspaceEnum kenum(f, n, k);

  // rhs = A f: replication counts of each d-space over the members
  std::vector<int64_t> rhs(mc.count, 0);
  for (uint64_t i = 0; i < kenum.total(); ++i) {
    if (!fam.bits.get(i)) continue;
    for_each_subspace_of(f, kenum.unrank(i), d,
                         [&](const Subspace& D) { ++rhs[denum.rank(D)]; });
  }

  // Gram eigencoefficients g_m = #k-spaces through a pair with meet dim m
  int nclass = d - mc.m_lo + 1;
  std::vector<Rat> g(nclass);
  for (int m = mc.m_lo; m <= d; ++m)
    g[m - mc.m_lo] = Rat(long(gaussian_binomial(n - (2 * d - m), k - (2 * d - m), q)));

  // G^{-1} = sum_m gamma_m M_m: fix gamma by evaluating G * G^{-1} on one
  // representative pair per class
  std::vector<uint64_t> rep(nclass);
  {
    std::vector<bool> found(nclass, false);
    uint64_t needed = nclass;
    for (uint64_t j = 0; j < mc.count && needed; ++j) {
      int c = mc.at(0, j) - mc.m_lo;
      if (!found[c]) {
        found[c] = true;
        rep[c] = j;
        --needed;
      }
    }
    if (needed) fail_internal("missing meet-dimension class representative");
  }
  RatMat T(nclass, RatVec(nclass, Rat(0)));
  for (int c = 0; c < nclass; ++c) {
    uint64_t e = rep[c];
    for (uint64_t fidx = 0; fidx < mc.count; ++fidx) {
      int cf = mc.at(0, fidx) - mc.m_lo;
      int m = mc.at(fidx, e) - mc.m_lo;
      T[c][m] += g[cf];
    }
  }
  RatVec target(nclass, Rat(0));
  target[d - mc.m_lo] = 1;  // identity class: meet dimension d
  auto gamma = solve_any(std::move(T), std::move(target));
  if (!gamma) fail_internal("Gram system has no class-algebra inverse");

  // w[D] = sum_m gamma_m * (class-m sum of rhs around D)
  std::vector<uint64_t> support;
  for (uint64_t i = 0; i < mc.count; ++i)
    if (rhs[i]) support.push_back(i);
  WeightCertificate cert;
  cert.d = d;
  cert.w.assign(mc.count, Rat(0));
  parallel_for(mc.count, [&](uint64_t lo, uint64_t hi) {
    std::vector<int64_t> cls(nclass);
    for (uint64_t i = lo; i < hi; ++i) {
      std::fill(cls.begin(), cls.end(), 0);
      for (uint64_t s : support) cls[mc.at(i, s) - mc.m_lo] += rhs[s];
      Rat w(0);
      for (int m = 0; m < nclass; ++m)
        if (cls[m]) w += (*gamma)[m] * Rat(long(cls[m]));
      cert.w[i] = w;
    }
  });

  auto bad = certificate_mismatch(f, fam, cert);
  if (bad) {
    v.certified = false;
    v.witness = *bad;
  } else {
    v.certified = true;
    v.certificate = std::move(cert);
  }
  return v;
}

ReplayResult eval_certificate(const Field& f, const Family& fam, const WeightCertificate& cert) {
  auto bad = certificate_mismatch(f, fam, cert);
  ReplayResult r;
  r.replays = !bad;
  r.mismatch = bad;
  return r;
}

EquitableResult equitable_check(const Field& f, const Family& fam) {
  EquitableResult res;
  int64_t valency = eigenvalue_grassmann(0, fam.n, fam.k, f.q());
  res.qm.valency = valency;
  uint64_t total = fam.bits.size();
  uint64_t size = fam.size();
  if (size == 0 || size == total) {
    res.trivial = true;
    res.equitable = true;
    res.qm.a = size ? valency : 0;
    res.qm.b = res.qm.a;
    return res;
  }
  SubspaceEnum kenum(f, fam.n, fam.k);

  struct Slice {
    uint64_t lo = 0;
    std::optional<int64_t> a, b;
    uint64_t first_a = 0, first_b = 0;
    std::optional<std::pair<uint64_t, uint64_t>> witness;
  };
  std::vector<Slice> slices;
  std::mutex mu;
  parallel_for(total, [&](uint64_t lo, uint64_t hi) {
    Slice sl;
    sl.lo = lo;
    for (uint64_t i = lo; i < hi && !sl.witness; ++i) {
      Subspace s = kenum.unrank(i);
      int64_t inside = 0;
      for_each_neighbor(f, s, [&](const Subspace& t) { inside += fam.bits.get(kenum.rank(t)); });
      bool member = fam.bits.get(i);
      std::optional<int64_t>& slot = member ? sl.a : sl.b;
      uint64_t& first = member ? sl.first_a : sl.first_b;
      if (!slot) {
        slot = inside;
        first = i;
      } else if (*slot != inside) {
        sl.witness = {first, i};
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    slices.push_back(std::move(sl));
  });
  std::sort(slices.begin(), slices.end(), [](const Slice& x, const Slice& y) { return x.lo < y.lo; });

  std::optional<int64_t> a, b;
  uint64_t first_a = 0, first_b = 0;
  for (const Slice& sl : slices) {
    if (sl.witness && !res.witness) res.witness = sl.witness;
    for (int side = 0; side < 2; ++side) {
      const std::optional<int64_t>& v = side ? sl.b : sl.a;
      std::optional<int64_t>& acc = side ? b : a;
      uint64_t first = side ? sl.first_b : sl.first_a;
      if (!v) continue;
      if (!acc) {
        acc = v;
        (side ? first_b : first_a) = first;
      } else if (*acc != *v && !res.witness) {
        res.witness = {side ? first_b : first_a, first};
      }
    }
  }
  if (res.witness) {
    res.equitable = false;
    return res;
  }
  res.equitable = true;
  res.qm.a = *a;
  res.qm.b = *b;
  return res;
}

std::optional<std::array<int64_t, 2>> quotient_eigenvalues(const QuotientMatrix& m) {
  // rows (a, v-a; b, v-b): trace and determinant give the pair exactly
  int64_t tr = m.a + (m.valency - m.b);
  int64_t det = m.a * (m.valency - m.b) - (m.valency - m.a) * m.b;
  int64_t disc = tr * tr - 4 * det;
  if (disc < 0) return std::nullopt;
  int64_t s = int64_t(std::sqrt(double(disc)));
  while (s * s > disc) --s;
  while ((s + 1) * (s + 1) <= disc) ++s;
  if (s * s != disc) return std::nullopt;
  if ((tr + s) % 2 != 0) return std::nullopt;
  return std::array<int64_t, 2>{(tr + s) / 2, (tr - s) / 2};
}

bool quotient_eigen_check(const QuotientMatrix& m, int n, int k, int q) {
  auto eig = quotient_eigenvalues(m);
  if (!eig) return false;
  for (int64_t lambda : *eig) {
    bool found = false;
    for (int j = 0; j <= k && !found; ++j) found = (eigenvalue_grassmann(j, n, k, q) == lambda);
    if (!found) return false;
  }
  return true;
}

DesignCheckResult design_orthogonality_check(const Field& f, const Family& F, const Family& D,
                                             int d) {
  if (F.n != D.n || F.k != D.k) fail_usage("families live in different Grassmannians");
  DesignCheckResult res;
  SubspaceEnum denum(f, F.n, d);
  SubspaceEnum kenum(f, F.n, F.k);

  // replication counts of D over d-spaces
  std::vector<uint64_t> rep(denum.total(), 0);
  for (uint64_t i = 0; i < kenum.total(); ++i) {
    if (!D.bits.get(i)) continue;
    for_each_subspace_of(f, kenum.unrank(i), d,
                         [&](const Subspace& dd) { ++rep[denum.rank(dd)]; });
  }
  for (uint64_t i = 0; i < denum.total(); ++i)
    if (rep[i] != rep[0]) {
      res.status = DesignCheckResult::Status::refused_not_design;
      res.witness = i;
      return res;
    }
  res.lambda = denum.total() ? rep[0] : 0;

  DegreeVerdict dv = degree_test(f, F, d);
  if (!dv.certified) {
    res.status = DesignCheckResult::Status::refused_degree;
    res.witness = dv.witness;
    return res;
  }

  uint64_t inter = 0;
  for (uint64_t i = 0; i < kenum.total(); ++i) inter += F.bits.get(i) && D.bits.get(i);
  res.actual = inter;
  res.expected = Rat(long(F.size())) * Rat(long(D.size())) /
                 Rat(long(gaussian_binomial(F.n, F.k, f.q())));
  res.status = res.expected == Rat(long(inter)) ? DesignCheckResult::Status::holds
                                                : DesignCheckResult::Status::violated;
  return res;
}

namespace {

uint64_t pow_u64(uint64_t b, int e) {
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > ~uint64_t(0)) fail_resource("modulus overflow");
  }
  return uint64_t(r);
}

bool is_prime_u(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void push_design_entry(std::vector<DivisibilityEntry>& out, const std::string& source,
                       uint64_t design_size, uint64_t grassmannian, uint64_t size) {
  uint64_t modulus = grassmannian / std::gcd(grassmannian, design_size);
  out.push_back({source, 1, modulus, size % modulus == 0});
}

}  // namespace

std::vector<DivisibilityEntry> divisibility_report(int n, int k, int q, uint64_t size) {
  std::vector<DivisibilityEntry> out;
  if (n == 6 && k == 3 && q >= 2 && q <= 5) {
    static const uint64_t cs[] = {0, 0, 1, 3, 2, 13};
    uint64_t c = cs[q];
    uint64_t design = c * (pow_u64(q, 3) + 1) * q_int(5, q);
    push_design_entry(out, "2-(6,3," + std::to_string(c * (q + 1)) + ") design", design,
                      gaussian_binomial(n, k, q), size);
  }
  if (n == 7 && k == 3 && q >= 2 && q <= 5) {
    static const uint64_t ls[] = {0, 0, 3, 5, 21, 31};
    uint64_t lambda = ls[q];
    uint64_t design = lambda * (uint64_t(q) * q - q + 1) * q_int(7, q);
    push_design_entry(out, "2-(7,3," + std::to_string(lambda) + ") design", design,
                      gaussian_binomial(n, k, q), size);
  }
  if (n == 8 && k == 4 && q >= 2 && q <= 5) {
    static const uint64_t cs[] = {0, 0, 7, 455, 5733, 20181};
    uint64_t c = cs[q];
    uint64_t design = c * (pow_u64(q, 4) + 1) * q_int(7, q);
    push_design_entry(out, "2-(8,4," + std::to_string(c) + "*(q^2+q+1)) design", design,
                      gaussian_binomial(n, k, q), size);
  }
  if (k == 3 && n >= 7 && std::gcd(n, 24) == 1 && is_prime_u(q)) {
    // 2-(n,3,q^2+q+1) designs for prime q: (q^3-1)|F| = 0 mod q^(n-2)-1
    uint64_t mult = pow_u64(q, 3) - 1;
    uint64_t mod = pow_u64(q, n - 2) - 1;
    unsigned __int128 prod = (unsigned __int128)mult * size;
    out.push_back({"2-(" + std::to_string(n) + ",3,q^2+q+1) design family", mult, mod,
                   uint64_t(prod % mod) == 0});
  }
  if (q == 2 && k == 3) {
    auto binary_entry = [&](int base, uint64_t C) {
      if (n % base == 0 && n / base >= 3) {
        uint64_t mod = pow_u64(2, n - 2) - 1;
        unsigned __int128 prod = (unsigned __int128)C * size;
        out.push_back({"binary 2-(" + std::to_string(n) + ",3," + std::to_string(C) + ") design",
                       C, mod, uint64_t(prod % mod) == 0});
      }
    };
    binary_entry(8, 42);
    binary_entry(8, 312);
    binary_entry(9, 42);
    binary_entry(10, 210);
    binary_entry(13, 42);
  }
  return out;
}

JuntaResult junta_depends(const Field& f, const Family& fam, const std::vector<Subspace>& R) {
  if (R.size() > 64) fail_usage("junta test supports at most 64 reference subspaces");
  for (const Subspace& r : R)
    if (r.dim() != 1 && r.dim() != fam.n - 1)
      fail_usage("junta references must be points or hyperplanes");
  SubspaceEnum kenum(f, fam.n, fam.k);
  struct Pair {
    std::optional<uint64_t> member, nonmember;
  };
  std::map<uint64_t, Pair> classes;
  for (uint64_t i = 0; i < kenum.total(); ++i) {
    Subspace s = kenum.unrank(i);
    uint64_t sig = 0;
    for (size_t j = 0; j < R.size(); ++j) {
      bool inc = R[j].dim() == 1 ? contains(f, s, R[j]) : contains(f, R[j], s);
      if (inc) sig |= uint64_t(1) << j;
    }
    Pair& p = classes[sig];
    std::optional<uint64_t>& slot = fam.bits.get(i) ? p.member : p.nonmember;
    if (!slot) slot = i;
  }
  JuntaResult res;
  res.depends = true;
  uint64_t best = ~uint64_t(0);
  for (const auto& [sig, p] : classes) {
    if (!p.member || !p.nonmember) continue;
    res.depends = false;
    uint64_t m = std::min(*p.member, *p.nonmember);
    if (m < best) {
      best = m;
      res.witness = {*p.member, *p.nonmember};
    }
  }
  return res;
}

CoverBound junta_cover_bound(const Field& f, const Family& fam) {
  CoverBound res;
  uint64_t size = fam.size();
  if (size == 0 || size == fam.bits.size()) {
    res.trivial = true;
    return res;
  }
  SubspaceEnum kenum(f, fam.n, fam.k);
  SubspaceEnum pts(f, fam.n, 1);
  std::vector<uint64_t> point_load(pts.total(), 0);
  std::vector<uint64_t> hyper_load(pts.total(), 0);  // hyperplane = dual point
  for (uint64_t i = 0; i < kenum.total(); ++i) {
    if (!fam.bits.get(i)) continue;
    Subspace s = kenum.unrank(i);
    for_each_subspace_of(f, s, 1, [&](const Subspace& p) { ++point_load[pts.rank(p)]; });
    for_each_subspace_of(f, dual_space(f, s), 1,
                         [&](const Subspace& p) { ++hyper_load[pts.rank(p)]; });
  }
  uint64_t alpha = 0;
  for (uint64_t v : point_load) alpha = std::max(alpha, v);
  for (uint64_t v : hyper_load) alpha = std::max(alpha, v);
  res.alpha_star = alpha;
  res.bound = (size + alpha - 1) / alpha;
  return res;
}

CoveringResult covering_family_search(const Field& f, int n, int k, uint64_t budget,
                                      uint64_t seed) {
  if (n < 2 * k) fail_usage("covering search expects n >= 2k");
  CoveringResult res;
  res.seed = seed;
  Rng rng(seed);
  int m = n - k + 1;
  while (res.members.size() < budget) {
    Mat rows(m, n);
    for (auto& x : rows.a) x = Elem(rng.below(f.q()));
    Subspace h = span_of(f, std::move(rows));
    if (h.dim() == m) res.members.push_back(std::move(h));
  }
  SubspaceEnum kenum(f, n, k);
  for (uint64_t i = 0; i < kenum.total(); ++i) {
    Subspace s = kenum.unrank(i);
    Mat picked(0, n);
    int rank = 0;
    for_each_point(f, s, [&](const std::vector<Elem>& v) {
      if (rank == k) return;
      bool covered = false;
      for (const Subspace& h : res.members)
        if (contains_vector(f, h, v)) {
          covered = true;
          break;
        }
      if (!covered) return;
      Mat trial((picked.rows + 1), n);
      for (int r = 0; r < picked.rows; ++r)
        for (int c = 0; c < n; ++c) trial.at(r, c) = picked.at(r, c);
      for (int c = 0; c < n; ++c) trial.at(picked.rows, c) = v[c];
      Mat copy = trial;
      if (rref(f, copy) > rank) {
        picked = std::move(trial);
        rank = copy.rows;
      }
    });
    if (rank < k) {
      res.success = false;
      res.witness = i;
      return res;
    }
  }
  res.success = true;
  return res;
}

}  // namespace gdl
