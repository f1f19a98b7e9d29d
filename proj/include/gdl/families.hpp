#pragma once

// Constructors for the degree-2 families: bitsets over the canonical
// k-space enumeration, each carrying a weight certificate on d-spaces when
// one can be written down from the defining subspaces. Certificates that
// only exist by solver are attached downstream by the certification engine.

#include <optional>
#include <string>
#include <vector>

#include "gdl/forms.hpp"
#include "gdl/setdomains.hpp"
#include "gdl/subspace.hpp"
#include "json.hpp"

namespace gdl {

// exact rational weights on the d-space enumeration (dense; zero = absent)
struct WeightCertificate {
  int d = 0;
  RatVec w;
};

struct Family {
  FieldSpec field;
  int n = 0, k = 0;
  Bitset bits;
  std::string construction;
  nlohmann::json params = nlohmann::json::object();
  std::optional<WeightCertificate> cert;

  uint64_t size() const { return bits.count(); }
  uint64_t total() const { return bits.size(); }
};

Family family_from_predicate(const Field& f, int n, int k, const std::string& name,
                             const std::function<bool(const Subspace&)>& member);

// 1 - f carries the certificate (1/Gauss(k,d)) - wt when f carries wt.
Family complement_family(const Field& f, const Family& fam);

// ---- trivial families -------------------------------------------------

// x_T: all k-spaces incident with T (containing T when dim T <= k, inside T
// otherwise), with a degree-d certificate from the meet-dimension profile.
Family trivial_pencil(const Field& f, int n, int k, const Subspace& T, int d);

// x_{T,i}: k-spaces S with dim(S cap T) = dim T - i, certificate at degree
// d = dim T.
Family trivial_meet_profile(const Field& f, int n, int k, const Subspace& T, int i);

// x_P x_H: k-spaces through the point P inside the hyperplane H (P inside H).
Family trivial_product(const Field& f, int n, int k, const Subspace& P, const Subspace& H);

// sum over the q+1 hyperplanes H through the coline C of x_H x_{P_H}, the
// P_H distinct chosen points of H outside C (least-rank choices when not
// supplied). The pieces are pairwise disjoint. The measured size is reported
// next to the (q+1)*Gauss(n-1,k-1) claim in params, with a match flag.
Family hyperplane_point_union(const Field& f, int n, int k, const Subspace& C,
                              const std::vector<Subspace>& points = {});

// ---- global families --------------------------------------------------

// spread of d-spaces by field reduction; family of k-spaces through a
// spread element, Boolean for d <= k <= 2d-1; certificate = indicator
// weights of the spread itself.
Family spread_family(const Field& f, int n, int d, int k);

// f(S) = h([b_1 in S], ..., [b_m in S]); degree = multilinear degree of h.
Family hypercube_lift(const Field& f, int n, int k, const CubeFunction& h,
                      const std::vector<std::vector<Elem>>& B);

enum class SympWhich { isotropic, point_radical };
Family symplectic_planes(const Field& f, int n, SympWhich which);

enum class QuadricWhich { f1, f2 };
Family quadric_planes(const Field& f, int n, FormSubtype subtype, QuadricWhich which);

Family elliptic_solids(const Field& f);  // n = 8

// ---- local and sporadic families (n = 6, k = 3) -----------------------

// A change of basis applied to every defining subspace; identity when
// absent. random_gl gives a seeded invertible matrix for robustness runs.
Mat random_gl(const Field& f, int n, uint64_t seed);

Family line_plus_spread(const Field& f, const Mat* transform = nullptr);
Family incident_pph(const Field& f, const Mat* transform = nullptr);

enum class LineSolidVariant { pi12, pi13 };
Family sporadic_line_solid(const Field& f, LineSolidVariant variant,
                           const Mat* transform = nullptr);  // q = 2
Family sporadic_pplh(const Field& f, const Mat* transform = nullptr);  // q = 2

// the junta sets the sporadic and local examples depend on
std::vector<Subspace> line_plus_spread_junta(const Field& f);
std::vector<Subspace> incident_pph_junta(const Field& f);
std::vector<Subspace> sporadic_line_solid_junta(const Field& f);
std::vector<Subspace> sporadic_pplh_junta(const Field& f);

// ---- restriction and quotient -----------------------------------------

Family restrict_family(const Field& f, const Family& fam, const Subspace& H);
Family quotient_family(const Field& f, const Family& fam, const Subspace& P);

// ---- certificate helpers ----------------------------------------------

// weights constant on {dim(D cap T) = j} solving the incidence profile
// system; target[m] indexed by dim(S cap T). nullopt when inconsistent.
std::optional<RatVec> meet_profile_weights(int n, int k, int d, int t, int q,
                                           const std::function<Rat(int)>& target);

// #{D in [S choose d] : dim(D cap W) = j} for an m-space W inside a k-space S
uint64_t count_meeting_subspaces(int k, int d, int m, int j, int q);

// Sum of the certificate weights over the d-subspaces of each k-space,
// compared against membership; used by constructors to validate certificates
// they assemble. Returns the first mismatching k-space rank, if any.
std::optional<uint64_t> certificate_mismatch(const Field& f, const Family& fam,
                                             const WeightCertificate& cert);

}  // namespace gdl
