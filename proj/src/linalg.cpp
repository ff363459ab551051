#include "dsop/linalg.hpp"

namespace dsop {

ExactSolveResult solve_exact(Matrix<Rational> a, std::vector<Rational> b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows && piv == rows; ++i)
      if (a(i, c) != 0) piv = i;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(r, k), a(piv, k));
      std::swap(b[r], b[piv]);
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t k = c; k < cols; ++k) a(i, k) -= f * a(r, k);
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  ExactSolveResult out;
  out.rank = r;
  out.consistent = true;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) out.consistent = false;
  if (!out.consistent) return out;
  out.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.x[pivot_cols[i]] = b[i];
  return out;
}

}  // namespace dsop
