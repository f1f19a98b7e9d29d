#include "gdl/rational.hpp"

#include "gdl/util.hpp"

namespace gdl {

Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) fail_usage("cannot parse rational '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::optional<RatVec> solve_any(RatMat A, RatVec b) {
  size_t rows = A.size();
  size_t cols = rows ? A[0].size() : 0;
  if (b.size() != rows) fail_internal("solve_any: shape mismatch");

  std::vector<size_t> pivot_col(rows, size_t(-1));
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    Rat inv = 1 / A[r][c];
    for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col[r] = c;
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;

  RatVec x(cols, Rat(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

uint64_t rational_rank(RatMat A) {
  size_t rows = A.size();
  size_t cols = rows ? A[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    Rat inv = 1 / A[r][c];
    for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
    for (size_t i = r + 1; i < rows; ++i) {
      if (A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace gdl
