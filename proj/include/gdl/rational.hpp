#pragma once

// Exact rational arithmetic (GMP) plus a small dense Gauss-Jordan solver.
// Everything on a certification path runs through these; no floating point.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace gdl {

using Rat = mpq_class;

// mpq_class(num, den) does not reduce; this does.
inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_parse(const std::string& s);  // "p/q" or "p"
std::string rat_str(const Rat& r);

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major dense

// One exact solution of A x = b (free variables set to 0), or nullopt when
// the system is inconsistent. A need not be square or full rank.
std::optional<RatVec> solve_any(RatMat A, RatVec b);

// Rank over the rationals.
uint64_t rational_rank(RatMat A);

}  // namespace gdl
