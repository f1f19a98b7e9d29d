#include "gdl/setdomains.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gdl {

CubeFunction cube_constant(int m, bool v) {
  CubeFunction f{m, Bitset(uint64_t(1) << m)};
  if (v)
    for (uint64_t i = 0; i < f.table.size(); ++i) f.table.set(i);
  return f;
}

CubeFunction cube_variable(int m, int i) {
  CubeFunction f{m, Bitset(uint64_t(1) << m)};
  for (uint64_t x = 0; x < f.table.size(); ++x)
    if ((x >> i) & 1) f.table.set(x);
  return f;
}

CubeFunction cube_and(int arity) {
  CubeFunction f{arity, Bitset(uint64_t(1) << arity)};
  f.table.set(f.table.size() - 1);
  return f;
}

CubeFunction cube_xor(int arity) {
  CubeFunction f{arity, Bitset(uint64_t(1) << arity)};
  for (uint64_t x = 0; x < f.table.size(); ++x)
    if (__builtin_popcountll(x) & 1) f.table.set(x);
  return f;
}

CubeFunction cube_from_bits(int m, uint64_t bits) {
  if (m > 6) fail_usage("cube_from_bits supports m <= 6");
  CubeFunction f{m, Bitset(uint64_t(1) << m)};
  for (uint64_t x = 0; x < f.table.size(); ++x)
    if ((bits >> x) & 1) f.table.set(x);
  return f;
}

bool cube_eval(const CubeFunction& f, uint32_t x) { return f.table.get(x); }

int multilinear_degree(const CubeFunction& f) {
  if (f.m > 16) fail_usage("multilinear_degree supports arity <= 16");
  uint32_t size = uint32_t(1) << f.m;
  std::vector<int64_t> c(size);
  for (uint32_t x = 0; x < size; ++x) c[x] = f.table.get(x);
  // subset Moebius transform: c[T] becomes the multilinear coefficient of T
  for (int b = 0; b < f.m; ++b)
    for (uint32_t t = 0; t < size; ++t)
      if ((t >> b) & 1) c[t] -= c[t ^ (uint32_t(1) << b)];
  int deg = 0;
  for (uint32_t t = 0; t < size; ++t)
    if (c[t] != 0) deg = std::max(deg, __builtin_popcount(t));
  return deg;
}

namespace {

// index maps x -> sigma(x) for the 24 * 16 input transformations on 4 vars
const std::vector<std::array<uint8_t, 16>>& input_maps() {
  static std::vector<std::array<uint8_t, 16>> maps = [] {
    std::vector<std::array<uint8_t, 16>> out;
    std::array<int, 4> perm{0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
      for (int neg = 0; neg < 16; ++neg) {
        std::array<uint8_t, 16> map{};
        for (int x = 0; x < 16; ++x) {
          int y = 0;
          for (int b = 0; b < 4; ++b) {
            int bit = (x >> perm[b]) & 1;
            if ((neg >> b) & 1) bit ^= 1;
            y |= bit << b;
          }
          map[x] = uint8_t(y);
        }
        out.push_back(map);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return maps;
}

}  // namespace

uint16_t cube_canonical_form(uint16_t table) {
  uint16_t best = 0xffff;
  for (const auto& map : input_maps()) {
    uint16_t t = 0;
    for (int x = 0; x < 16; ++x)
      if ((table >> map[x]) & 1) t |= uint16_t(1) << x;
    best = std::min(best, t);
    best = std::min(best, uint16_t(~t));
  }
  return best;
}

CubeClassification classify_degree2_small() {
  std::set<uint16_t> reps;
  for (uint32_t table = 0; table < 65536; ++table) {
    // inline degree check on 16 entries
    int64_t c[16];
    for (int x = 0; x < 16; ++x) c[x] = (table >> x) & 1;
    for (int b = 0; b < 4; ++b)
      for (int t = 0; t < 16; ++t)
        if ((t >> b) & 1) c[t] -= c[t ^ (1 << b)];
    bool low = true;
    for (int t = 0; t < 16 && low; ++t)
      if (c[t] != 0 && __builtin_popcount(t) > 2) low = false;
    if (!low) continue;
    reps.insert(cube_canonical_form(uint16_t(table)));
  }
  CubeClassification out;
  out.representatives.assign(reps.begin(), reps.end());
  return out;
}

uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * uint64_t(n - k + i) / uint64_t(i);
  return r;
}

uint64_t colex_rank(uint32_t mask) {
  uint64_t r = 0;
  int i = 1;
  for (int c = 0; c < 32; ++c)
    if ((mask >> c) & 1) r += binom(c, i++);
  return r;
}

uint32_t colex_unrank(int n, int k, uint64_t r) {
  uint32_t mask = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < n && binom(c + 1, i) <= r) ++c;
    mask |= uint32_t(1) << c;
    r -= binom(c, i);
  }
  return mask;
}

SetFamily groupwise_family(int n, int d, int k) {
  if (d <= 0 || n % d != 0) fail_usage("groupwise family needs d dividing n");
  if (k > 2 * d - 1) fail_usage("groupwise family needs k <= 2d-1");
  if (k < d) fail_usage("groupwise family needs k >= d");
  SetFamily f{n, k, Bitset(binom(n, k))};
  std::vector<uint32_t> parts;
  for (int i = 0; i < n / d; ++i) {
    uint32_t p = 0;
    for (int j = 0; j < d; ++j) p |= uint32_t(1) << (i * d + j);
    parts.push_back(p);
  }
  for (uint64_t r = 0; r < f.bits.size(); ++r) {
    uint32_t mask = colex_unrank(n, k, r);
    for (uint32_t p : parts)
      if ((mask & p) == p) {
        f.bits.set(r);
        break;
      }
  }
  return f;
}

std::optional<std::array<int64_t, 2>> johnson_equitable(const SetFamily& f) {
  int64_t a = -1, b = -1;
  uint64_t total = binom(f.n, f.k);
  for (uint64_t r = 0; r < total; ++r) {
    uint32_t mask = colex_unrank(f.n, f.k, r);
    int64_t inside = 0;
    for (int i = 0; i < f.n; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (int j = 0; j < f.n; ++j) {
        if ((mask >> j) & 1) continue;
        uint32_t nb = (mask ^ (uint32_t(1) << i)) | (uint32_t(1) << j);
        inside += f.bits.get(colex_rank(nb));
      }
    }
    int64_t& slot = f.bits.get(r) ? a : b;
    if (slot < 0)
      slot = inside;
    else if (slot != inside)
      return std::nullopt;
  }
  return std::array<int64_t, 2>{a, b};
}

bool johnson_depends_on(const SetFamily& f, uint32_t coordinate_mask) {
  std::map<uint32_t, int> first_value;
  uint64_t total = binom(f.n, f.k);
  for (uint64_t r = 0; r < total; ++r) {
    uint32_t sig = colex_unrank(f.n, f.k, r) & coordinate_mask;
    int v = f.bits.get(r);
    auto [it, fresh] = first_value.emplace(sig, v);
    if (!fresh && it->second != v) return false;
  }
  return true;
}

JohnsonExample johnson_example_84() {
  static const char* prefixes[] = {"11000", "01100", "00110", "00011", "10001",
                                   "11100", "01110", "00111", "10011", "11001"};
  std::vector<uint32_t> masks;
  for (const char* p : prefixes) {
    uint32_t m = 0;
    for (int i = 0; i < 5; ++i)
      if (p[i] == '1') m |= uint32_t(1) << i;
    masks.push_back(m);
  }
  JohnsonExample ex;
  ex.family = SetFamily{8, 4, Bitset(binom(8, 4))};
  for (uint64_t r = 0; r < ex.family.bits.size(); ++r) {
    uint32_t mask = colex_unrank(8, 4, r);
    uint32_t head = mask & 31u;
    for (uint32_t m : masks)
      if (head == m) {
        ex.family.bits.set(r);
        break;
      }
  }
  auto eq = johnson_equitable(ex.family);
  if (!eq) fail_internal("the J(8,4) example must be equitable");
  int64_t val = int64_t(ex.family.k) * (ex.family.n - ex.family.k);
  ex.quotient = {(*eq)[0], val - (*eq)[0], (*eq)[1], val - (*eq)[1]};
  ex.relevant_coordinates = {0, 1, 2, 3, 4};
  return ex;
}

JohnsonVerdict johnson_degree_test(const SetFamily& f, int d, uint64_t cap) {
  JohnsonVerdict v;
  v.d = d;
  uint64_t drows = binom(f.n, d);
  uint64_t kcols = binom(f.n, f.k);
  if (drows > cap) fail_resource("johnson degree test exceeds the solver cap");

  // Gram matrix of the inclusion matrix: entries depend on |D cup E|
  RatMat G(drows, RatVec(drows, Rat(0)));
  for (uint64_t i = 0; i < drows; ++i) {
    uint32_t di = colex_unrank(f.n, d, i);
    for (uint64_t j = 0; j < drows; ++j) {
      uint32_t u = di | colex_unrank(f.n, d, j);
      int usz = __builtin_popcount(u);
      G[i][j] = Rat(long(binom(f.n - usz, f.k - usz)));
    }
  }
  RatVec rhs(drows, Rat(0));
  for (uint64_t r = 0; r < kcols; ++r) {
    if (!f.bits.get(r)) continue;
    uint32_t mask = colex_unrank(f.n, f.k, r);
    // iterate d-subsets of mask
    std::vector<int> elems;
    for (int i = 0; i < f.n; ++i)
      if ((mask >> i) & 1) elems.push_back(i);
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      uint32_t sub = 0;
      for (int i = 0; i < d; ++i) sub |= uint32_t(1) << elems[idx[i]];
      rhs[colex_rank(sub)] += 1;
      int i = d - 1;
      while (i >= 0 && idx[i] == int(elems.size()) - d + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  auto sol = solve_any(G, rhs);
  if (!sol) fail_internal("johnson Gram system must be solvable");
  // verify against every k-set
  for (uint64_t r = 0; r < kcols; ++r) {
    uint32_t mask = colex_unrank(f.n, f.k, r);
    Rat sum(0);
    std::vector<int> elems;
    for (int i = 0; i < f.n; ++i)
      if ((mask >> i) & 1) elems.push_back(i);
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      uint32_t sub = 0;
      for (int i = 0; i < d; ++i) sub |= uint32_t(1) << elems[idx[i]];
      sum += (*sol)[colex_rank(sub)];
      int i = d - 1;
      while (i >= 0 && idx[i] == int(elems.size()) - d + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (sum != Rat(f.bits.get(r) ? 1 : 0)) {
      v.certified = false;
      v.witness = r;
      return v;
    }
  }
  v.certified = true;
  v.weights = std::move(*sol);
  return v;
}

}  // namespace gdl
