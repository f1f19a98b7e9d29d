#pragma once

// Companion domains: Boolean functions on the hypercube {0,1}^m and set
// families in the Johnson graph J(n,k). Hypercube degree is the degree of
// the unique multilinear expansion (integer Moebius transform); Johnson
// degree is decided exactly against the d-set-to-k-set inclusion matrix.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gdl/rational.hpp"
#include "gdl/util.hpp"

namespace gdl {

struct CubeFunction {
  int m = 0;          // arity, at most 16
  Bitset table;       // 2^m entries, index bit i = variable i
};

CubeFunction cube_constant(int m, bool v);
CubeFunction cube_variable(int m, int i);
CubeFunction cube_and(int arity);
CubeFunction cube_xor(int arity);
CubeFunction cube_from_bits(int m, uint64_t bits);  // m <= 6
bool cube_eval(const CubeFunction& f, uint32_t x);

int multilinear_degree(const CubeFunction& f);

// Classes of degree <= 2 functions of four variables, up to permutation and
// negation of the inputs and complement of the output; class representatives
// are the minimal 16-bit truth tables.
struct CubeClassification {
  std::vector<uint16_t> representatives;  // sorted canonical truth tables
};
CubeClassification classify_degree2_small();
uint16_t cube_canonical_form(uint16_t table);

// k-subsets of {0..n-1} in colex order
uint64_t binom(int n, int k);
uint64_t colex_rank(uint32_t mask);
uint32_t colex_unrank(int n, int k, uint64_t r);

struct SetFamily {
  int n = 0, k = 0;
  Bitset bits;  // over colex ranks
  uint64_t size() const { return bits.count(); }
};

SetFamily groupwise_family(int n, int d, int k);  // d | n, k <= 2d-1

struct JohnsonExample {
  SetFamily family;
  std::array<int64_t, 4> quotient;  // (a, val-a, b, val-b)
  std::vector<int> relevant_coordinates;
};
JohnsonExample johnson_example_84();

// (a, b) of the equitable bipartition, or nullopt when not equitable
std::optional<std::array<int64_t, 2>> johnson_equitable(const SetFamily& f);

bool johnson_depends_on(const SetFamily& f, uint32_t coordinate_mask);

struct JohnsonVerdict {
  int d = 0;
  bool certified = false;
  std::optional<RatVec> weights;      // over d-sets in colex order
  std::optional<uint64_t> witness;    // k-set rank where no solution exists
};
JohnsonVerdict johnson_degree_test(const SetFamily& f, int d, uint64_t cap = 4096);

}  // namespace gdl
