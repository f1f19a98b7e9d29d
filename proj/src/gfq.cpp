#include "gdl/gfq.hpp"

#include <algorithm>

namespace gdl {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// polynomials over GF(p) as coefficient vectors, index = degree
using Poly = std::vector<int>;

Poly trimmed(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_rem(Poly a, const Poly& m, int p) {
  a = trimmed(std::move(a));
  Poly mm = trimmed(m);
  int dm = int(mm.size()) - 1;
  // make divisor monic
  int lead = mm[dm];
  int lead_inv = 1;
  for (int t = 1; t < p; ++t)
    if (lead * t % p == 1) lead_inv = t;
  while (int(a.size()) - 1 >= dm && !a.empty()) {
    int da = int(a.size()) - 1;
    int f = a[da] * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      int& c = a[da - dm + i];
      c = ((c - f * mm[i]) % p + p) % p;
    }
    a = trimmed(std::move(a));
  }
  return a;
}

Poly poly_product(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

// irreducible over GF(p): monic, degree >= 1, no monic divisor of degree
// 1..e/2 (trial division)
bool poly_irreducible(const Poly& m, int p) {
  Poly mm = trimmed(m);
  int e = int(mm.size()) - 1;
  if (e < 1) return false;
  if (e == 1) return true;
  for (int d = 1; 2 * d <= e; ++d) {
    // all monic polynomials of degree d: p^d candidates
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t c = 0; c < count; ++c) {
      Poly div(d + 1, 0);
      int64_t v = c;
      for (int i = 0; i < d; ++i) {
        div[i] = int(v % p);
        v /= p;
      }
      div[d] = 1;
      if (poly_rem(mm, div, p).empty()) return false;
    }
  }
  return true;
}

int digits_to_int(const Poly& a, int p) {
  int v = 0;
  for (int i = int(a.size()) - 1; i >= 0; --i) v = v * p + a[i];
  return v;
}

Poly int_to_digits(int a, int p, int e) {
  Poly r(e, 0);
  for (int i = 0; i < e; ++i) {
    r[i] = a % p;
    a /= p;
  }
  return r;
}

}  // namespace

int Field::poly_add(const FieldSpec& s, int a, int b) {
  Poly da = int_to_digits(a, s.p, s.e), db = int_to_digits(b, s.p, s.e);
  for (int i = 0; i < s.e; ++i) da[i] = (da[i] + db[i]) % s.p;
  return digits_to_int(da, s.p);
}

int Field::poly_mul(const FieldSpec& s, int a, int b) {
  Poly prod = poly_product(int_to_digits(a, s.p, s.e), int_to_digits(b, s.p, s.e), s.p);
  Poly mod(s.modulus.begin(), s.modulus.end());
  Poly rem = poly_rem(prod, mod, s.p);
  rem.resize(s.e, 0);
  return digits_to_int(rem, s.p);
}

FieldSpec default_field_spec(int q) {
  int p = 0, e = 0;
  for (int c = 2; c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  if (p == 0 || !is_prime(p)) fail_usage("field order must be a prime power");
  int v = q;
  while (v > 1) {
    if (v % p != 0) fail_usage("field order must be a prime power");
    v /= p;
    ++e;
  }
  FieldSpec s;
  s.p = p;
  s.e = e;
  s.q = q;
  if (e == 1) {
    s.modulus = {0, 1};
    return s;
  }
  if (q == 4) {
    s.modulus = {1, 1, 1};
    return s;
  }
  if (q == 8) {
    s.modulus = {1, 1, 0, 1};
    return s;
  }
  if (q == 9) {
    s.modulus = {1, 0, 1};
    return s;
  }
  // lexicographically least monic irreducible of degree e
  int64_t count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (int64_t c = 0; c < count; ++c) {
    Poly m(e + 1, 0);
    int64_t vv = c;
    for (int i = 0; i < e; ++i) {
      m[i] = int(vv % p);
      vv /= p;
    }
    m[e] = 1;
    if (poly_irreducible(m, p)) {
      s.modulus.assign(m.begin(), m.end());
      return s;
    }
  }
  fail_internal("no irreducible modulus found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) fail_usage("field characteristic must be prime");
  if (spec_.e < 1) fail_usage("extension degree must be >= 1");
  int q = 1;
  for (int i = 0; i < spec_.e; ++i) {
    q *= spec_.p;
    if (q > 512) fail_usage("supported field orders are q <= 512");
  }
  if (spec_.q != q) fail_usage("field spec q does not match p^e");
  if (int(spec_.modulus.size()) != spec_.e + 1 || spec_.modulus.back() != 1)
    fail_usage("modulus must be monic of degree e");
  for (int c : spec_.modulus)
    if (c < 0 || c >= spec_.p) fail_usage("modulus coefficients must lie in [0, p)");
  {
    Poly m(spec_.modulus.begin(), spec_.modulus.end());
    if (!poly_irreducible(m, spec_.p)) fail_usage("modulus is not irreducible over GF(p)");
  }

  add_.resize(size_t(q) * q);
  mul_.resize(size_t(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  frob_.resize(q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      add_[size_t(a) * q + b] = Elem(poly_add(spec_, a, b));
      mul_[size_t(a) * q + b] = Elem(poly_mul(spec_, a, b));
    }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[size_t(a) * q + b] == 0) neg_[a] = Elem(b);
      if (a != 0 && mul_[size_t(a) * q + b] == 1) inv_[a] = Elem(b);
    }
  }
  for (int a = 0; a < q; ++a) {
    Elem v = 1;
    for (int i = 0; i < spec_.p; ++i) v = mul(v, Elem(a));
    frob_[a] = v;
  }
}

Elem Field::pow(Elem a, uint64_t k) const {
  Elem r = 1, b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

Elem field_arith(const Field& f, const std::string& op, int a, int b) {
  auto check = [&](int x) {
    if (x < 0 || x >= f.q()) fail_usage("field element out of range");
    return Elem(x);
  };
  Elem ea = check(a);
  if (op == "inv") return f.inv(ea);
  if (op == "frobenius") return f.frobenius(ea);
  Elem eb = check(b);
  if (op == "add") return f.add(ea, eb);
  if (op == "sub") return f.sub(ea, eb);
  if (op == "mul") return f.mul(ea, eb);
  fail_usage("unknown field operation '" + op + "'");
}

std::pair<Elem, Elem> find_irreducible_quadratic(const Field& f) {
  for (int alpha = 0; alpha < f.q(); ++alpha)
    for (int beta = 0; beta < f.q(); ++beta) {
      bool has_root = false;
      for (int t = 0; t < f.q() && !has_root; ++t) {
        Elem v = f.add(f.add(f.mul(Elem(t), Elem(t)), f.mul(Elem(alpha), Elem(t))), Elem(beta));
        has_root = (v == 0);
      }
      if (!has_root) return {Elem(alpha), Elem(beta)};
    }
  fail_internal("no irreducible quadratic found");
}

TowerField::TowerField(const Field& base, int d) : base_(base), d_(d) {
  if (d < 1) fail_usage("extension degree must be >= 1");
  // least monic irreducible of degree d over the base, by trial division
  // against all monic polynomials of degree <= d/2 over the base
  auto rem_by = [&](std::vector<Elem> a, const std::vector<Elem>& m) {
    int dm = int(m.size()) - 1;
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (int(a.size()) - 1 >= dm && !a.empty()) {
      int da = int(a.size()) - 1;
      Elem fcoef = a[da];  // m monic
      for (int i = 0; i <= dm; ++i) {
        Elem& c = a[da - dm + i];
        c = base_.sub(c, base_.mul(fcoef, m[i]));
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
  };
  uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= uint64_t(base_.q());
  for (uint64_t c = 0; c < count; ++c) {
    std::vector<Elem> m(d + 1, 0);
    uint64_t v = c;
    for (int i = 0; i < d; ++i) {
      m[i] = Elem(v % base_.q());
      v /= base_.q();
    }
    m[d] = 1;
    bool irred = (d == 1);
    if (!irred) {
      irred = true;
      for (int dd = 1; 2 * dd <= d && irred; ++dd) {
        uint64_t cnt2 = 1;
        for (int i = 0; i < dd; ++i) cnt2 *= uint64_t(base_.q());
        for (uint64_t c2 = 0; c2 < cnt2 && irred; ++c2) {
          std::vector<Elem> div(dd + 1, 0);
          uint64_t v2 = c2;
          for (int i = 0; i < dd; ++i) {
            div[i] = Elem(v2 % base_.q());
            v2 /= base_.q();
          }
          div[dd] = 1;
          if (rem_by(m, div).empty()) irred = false;
        }
      }
    }
    if (irred) {
      mod_ = m;
      return;
    }
  }
  fail_internal("no irreducible polynomial found for tower field");
}

std::vector<Elem> TowerField::add(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
  std::vector<Elem> r(d_);
  for (int i = 0; i < d_; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

std::vector<Elem> TowerField::mul(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
  std::vector<Elem> prod(2 * d_ - 1, 0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
  // reduce by the monic modulus
  for (int da = 2 * d_ - 2; da >= d_; --da) {
    Elem f = prod[da];
    if (f == 0) continue;
    prod[da] = 0;
    for (int i = 0; i < d_; ++i) {
      Elem& c = prod[da - d_ + i];
      c = base_.sub(c, base_.mul(f, mod_[i]));
    }
  }
  prod.resize(d_);
  return prod;
}

}  // namespace gdl
