#pragma once

// GF(q) arithmetic for prime powers q = p^e up to 512. An element is an
// integer in [0, q): the base-p digit vector of its residue polynomial,
// digit i being the coefficient of x^i. All operations run from tables
// built once per field; the schoolbook polynomial arithmetic that fills
// the tables stays exposed as the correctness oracle for tests.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gdl/util.hpp"

namespace gdl {

using Elem = uint16_t;

struct FieldSpec {
  int p = 2;
  int e = 1;
  std::vector<int> modulus;  // c0..ce of a monic irreducible over GF(p), ce = 1
  int q = 2;
  bool operator==(const FieldSpec&) const = default;
};

// Default modulus for q = p^e: x for e = 1; the shipped polynomials
// x^2+x+1 (GF4), x^3+x+1 (GF8), x^2+1 (GF9); otherwise the
// lexicographically least monic irreducible (by c0..c_{e-1} digits).
FieldSpec default_field_spec(int q);

class Field {
 public:
  explicit Field(FieldSpec spec);  // verifies irreducibility of the modulus
  static Field of_order(int q) { return Field(default_field_spec(q)); }

  const FieldSpec& spec() const { return spec_; }
  int q() const { return spec_.q; }
  int p() const { return spec_.p; }
  int e() const { return spec_.e; }

  Elem add(Elem a, Elem b) const { return add_[size_t(a) * spec_.q + b]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[size_t(a) * spec_.q + b]; }
  Elem inv(Elem a) const {
    if (a == 0) fail_usage("zero inverse");
    return inv_[a];
  }
  Elem frobenius(Elem a) const { return frob_[a]; }
  Elem pow(Elem a, uint64_t k) const;

  // definitional arithmetic on digit-encoded residues (the table oracle)
  static int poly_add(const FieldSpec& s, int a, int b);
  static int poly_mul(const FieldSpec& s, int a, int b);

 private:
  FieldSpec spec_;
  std::vector<Elem> add_, mul_, neg_, inv_, frob_;
};

// Checked dispatcher; op is one of add|sub|mul|inv|frobenius. b is ignored
// for the unary ops. Out-of-range elements are usage errors.
Elem field_arith(const Field& f, const std::string& op, int a, int b = -1);

// Lexicographically least (alpha, beta) with t^2 + alpha t + beta rootless
// over GF(q). Such a pair always exists.
std::pair<Elem, Elem> find_irreducible_quadratic(const Field& f);

// Degree-d extension of an arbitrary base field, used for spreads by field
// reduction. Elements are coefficient vectors of length d over the base.
class TowerField {
 public:
  TowerField(const Field& base, int d);

  int degree() const { return d_; }
  const Field& base() const { return base_; }
  const std::vector<Elem>& modulus() const { return mod_; }  // c0..cd, cd = 1

  std::vector<Elem> mul(const std::vector<Elem>& a, const std::vector<Elem>& b) const;
  std::vector<Elem> add(const std::vector<Elem>& a, const std::vector<Elem>& b) const;

 private:
  Field base_;
  int d_;
  std::vector<Elem> mod_;
};

}  // namespace gdl
