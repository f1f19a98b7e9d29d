#pragma once

// Canonical subspace machinery for F_q^n: RREF canonical forms, ranked
// enumeration of the Grassmannian J_q(n,k), meet/join, adjacency,
// d-to-k incidence, Gaussian coefficients and the graph spectrum.
//
// A subspace is identified with the unique reduced row echelon basis of its
// row space (pivot columns strictly increasing). The enumeration order is
// "rref-lex": pivot column sets in lexicographic order, then the free
// entries read row-major as big-endian base-q digits. The first element of
// J_q(n,k) is therefore the span of e_1..e_k. rank() and unrank() are
// mutually inverse, and no global lookup tables are required.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "gdl/gfq.hpp"
#include "gdl/rational.hpp"
#include "gdl/util.hpp"

namespace gdl {

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

  Elem& at(int i, int j) { return a[size_t(i) * cols + j]; }
  Elem at(int i, int j) const { return a[size_t(i) * cols + j]; }
  bool operator==(const Mat&) const = default;
};

Mat mat_mul(const Field& f, const Mat& x, const Mat& y);
Mat identity_mat(int n);

// In-place reduction to RREF; returns the rank (zero rows are removed).
int rref(const Field& f, Mat& m);

struct Subspace {
  int n = 0;     // ambient dimension
  Mat basis;     // RREF, rows = dim, cols = n

  int dim() const { return basis.rows; }
  bool operator==(const Subspace&) const = default;
};

uint64_t hash_value(const Subspace& s);

// Canonicalize arbitrary spanning rows (the zero matrix gives dim 0).
Subspace span_of(const Field& f, Mat rows);
Subspace span_of_vectors(const Field& f, int n, const std::vector<std::vector<Elem>>& rows);

bool contains_vector(const Field& f, const Subspace& s, const std::vector<Elem>& v);
bool contains(const Field& f, const Subspace& outer, const Subspace& inner);

Subspace meet(const Field& f, const Subspace& s, const Subspace& t);
Subspace join(const Field& f, const Subspace& s, const Subspace& t);
std::pair<Subspace, Subspace> meet_join(const Field& f, const Subspace& s, const Subspace& t);
int meet_dim(const Field& f, const Subspace& s, const Subspace& t);

// Annihilator under the standard dot product; involutive.
Subspace dual_space(const Field& f, const Subspace& s);

// Image of S in V/P for a 1-space P inside S, written in the complement
// coordinates (drop P's pivot coordinate); an (dim S - 1)-subspace of
// F_q^(n-1).
Subspace quotient_space(const Field& f, const Subspace& s, const Subspace& p);

// Coordinates of S inside a hyperplane H containing it: coefficients w.r.t.
// H's RREF basis, read off H's pivot columns. A subspace of F_q^(n-1).
Subspace restrict_to_hyperplane(const Field& f, const Subspace& s, const Subspace& h);

// rows are coefficient vectors w.r.t. s's basis; returns their span upstairs
Subspace map_rows(const Field& f, const Mat& local_rows, const Subspace& s);

// [m]_q = (q^m - 1)/(q - 1)
uint64_t q_int(int m, int q);
uint64_t gaussian_binomial(int n, int k, int q);  // exact, 0 outside 0<=k<=n
int64_t eigenvalue_grassmann(int j, int n, int k, int q);

class SubspaceEnum {
 public:
  SubspaceEnum(const Field& f, int n, int k, uint64_t cap = caps().enumeration);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int k() const { return k_; }
  uint64_t total() const { return total_; }

  Subspace unrank(uint64_t idx) const;
  uint64_t rank(const Subspace& s) const;

  // streaming in rank order
  void for_each(const std::function<void(uint64_t, const Subspace&)>& fn) const;

 private:
  Field field_;
  int n_, k_;
  uint64_t total_;
  std::vector<std::vector<int>> pivot_sets_;  // lex order
  std::vector<uint64_t> offsets_;             // offsets_[i] = first rank of set i
};

// All projective points of a subspace (normalized representatives, first
// nonzero local coefficient = 1); exactly [dim]_q calls.
void for_each_point(const Field& f, const Subspace& s,
                    const std::function<void(const std::vector<Elem>&)>& fn);

// All d-dimensional subspaces of s, mapped to ambient coordinates.
void for_each_subspace_of(const Field& f, const Subspace& s, int d,
                          const std::function<void(const Subspace&)>& fn);

// Grassmann neighbors (meet of dimension k-1); exactly q[k][n-k] calls.
void for_each_neighbor(const Field& f, const Subspace& s,
                       const std::function<void(const Subspace&)>& fn);

struct IncidenceMatrix {
  int d = 0, k = 0, n = 0, q = 0;
  uint64_t rows = 0, cols = 0;
  std::vector<std::vector<uint32_t>> row_support;  // k-space ranks per d-space
};

IncidenceMatrix incidence_matrix(const Field& f, int d, int k, int n);
uint64_t incidence_rational_rank(const IncidenceMatrix& m);

}  // namespace gdl
