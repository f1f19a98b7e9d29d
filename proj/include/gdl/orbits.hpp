#pragma once

// Actions of subgroups of GammaL(n,q) on subspaces: orbit decompositions by
// union-find over the canonical enumeration, the orbit-count comparison on
// d-spaces vs k-spaces with its degree consequence on equality, and the
// search for orbit unions that are low-degree families.

#include <vector>

#include "gdl/certify.hpp"
#include "gdl/forms.hpp"

namespace gdl {

struct SemilinearMap {
  Mat matrix;   // invertible n x n
  int frob = 0; // Frobenius power applied entrywise before the linear action
};

bool is_invertible(const Field& f, const Mat& m);
Subspace apply_map(const Field& f, const SemilinearMap& g, const Subspace& s);
// composition: first b, then a
SemilinearMap compose(const Field& f, const SemilinearMap& a, const SemilinearMap& b);
bool preserves_form(const Field& f, const SemilinearMap& g, const ClassicalForm& form);

// one transvection x -> x + sigma(x, v) v per projective point v of the
// standard symplectic space; each preserves sigma
std::vector<SemilinearMap> symplectic_transvection_generators(const Field& f, int n);

struct OrbitDecomposition {
  int m = 0;
  std::vector<std::vector<uint32_t>> orbits;  // each sorted; ordered by least element
};
OrbitDecomposition orbit_decomposition(const Field& f, int n,
                                       const std::vector<SemilinearMap>& gens, int m,
                                       uint64_t cap = caps().enumeration);

struct BlockCheck {
  uint64_t s = 0, t = 0;  // orbit counts on d-spaces and on k-spaces
  bool equal = false;
  // orbit characteristic vectors are degree-d exactly when s = t; verdicts
  // of the k-orbits, when requested and within solver caps
  std::vector<DegreeVerdict> orbit_verdicts;
};
BlockCheck block_equality_check(const Field& f, int n, const std::vector<SemilinearMap>& gens,
                                int d, int k, bool certify_orbits = true);

// all nonempty proper unions of k-orbits that pass the degree-d test,
// ordered by family size then by orbit index signature
std::vector<Family> orbit_union_search(const Field& f, int n,
                                       const std::vector<SemilinearMap>& gens, int d, int k,
                                       int max_orbits = 24);

}  // namespace gdl
