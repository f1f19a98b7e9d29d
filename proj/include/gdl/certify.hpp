#pragma once

// The certification engine: exact degree tests against the d-space-to-
// k-space incidence matrix, certificate replay, equitable-bipartition
// checks, design-orthogonality and divisibility reports, junta analysis
// and the random covering-family search.
//
// degree_test solves the Gram system (A A^T) w = A f exactly. The Gram
// matrix is constant on meet-dimension classes of pairs of d-spaces, and
// its inverse lies in the span of the same class matrices, so the solve
// reduces to one small exact system plus class sums; the result is then
// verified against every k-space, which makes the verdict independent of
// how w was produced.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdl/families.hpp"

namespace gdl {

struct DegreeVerdict {
  int d = 0;
  bool certified = false;
  std::optional<WeightCertificate> certificate;
  std::optional<uint64_t> witness;  // least k-space rank where A^T w != f
};

DegreeVerdict degree_test(const Field& f, const Family& fam, int d,
                          uint64_t solver_cap = caps().solver_rows);

struct ReplayResult {
  bool replays = false;
  std::optional<uint64_t> mismatch;
};
ReplayResult eval_certificate(const Field& f, const Family& fam, const WeightCertificate& cert);

struct QuotientMatrix {
  int64_t a = 0, b = 0, valency = 0;  // rows (a, v-a) and (b, v-b)
};

struct EquitableResult {
  bool equitable = false;
  bool trivial = false;  // empty or full family: one side is missing
  QuotientMatrix qm;
  std::optional<std::pair<uint64_t, uint64_t>> witness;  // same side, different counts
};
EquitableResult equitable_check(const Field& f, const Family& fam);

// integer eigenvalues of the quotient matrix, when they are integers
std::optional<std::array<int64_t, 2>> quotient_eigenvalues(const QuotientMatrix& m);
bool quotient_eigen_check(const QuotientMatrix& m, int n, int k, int q);

struct DesignCheckResult {
  enum class Status { holds, violated, refused_not_design, refused_degree };
  Status status = Status::holds;
  uint64_t lambda = 0;
  std::optional<uint64_t> witness;  // d-space with deviating replication
  Rat expected;                     // |F| |D| / Gauss(n,k)
  uint64_t actual = 0;              // |F cap D|
};
DesignCheckResult design_orthogonality_check(const Field& f, const Family& F, const Family& D,
                                             int d);

struct DivisibilityEntry {
  std::string source;
  uint64_t multiplier = 1;  // condition: modulus | multiplier * |F|
  uint64_t modulus = 1;
  bool satisfied = false;
};
std::vector<DivisibilityEntry> divisibility_report(int n, int k, int q, uint64_t size);

struct JuntaResult {
  bool depends = false;
  std::optional<std::pair<uint64_t, uint64_t>> witness;  // (member, non-member)
};
// R holds points and hyperplanes; signature of S = incidence with each
JuntaResult junta_depends(const Field& f, const Family& fam, const std::vector<Subspace>& R);

struct CoverBound {
  bool trivial = false;
  uint64_t alpha_star = 0;
  uint64_t bound = 0;  // ceil(|F| / alpha*), a junta-size lower bound
};
CoverBound junta_cover_bound(const Field& f, const Family& fam);

struct CoveringResult {
  bool success = false;
  std::vector<Subspace> members;       // sampled (n-k+1)-spaces
  std::optional<uint64_t> witness;     // k-space not spanned by its covered points
  uint64_t seed = 0;
};
CoveringResult covering_family_search(const Field& f, int n, int k, uint64_t budget,
                                      uint64_t seed);

}  // namespace gdl
