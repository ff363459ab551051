#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "dsop/errors.hpp"
#include "dsop/poly.hpp"

namespace dsop {

/// Dense row-major matrix.
template <CoefficientDomain T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

/// Solves A x = b for a symmetric positive definite A by Gaussian
/// elimination without pivoting. Each pivot is a ratio of consecutive
/// leading principal minors, so a pivot <= 0 proves A is not positive
/// definite; that raises SingularSystemError.
template <CoefficientDomain T>
std::vector<T> solve_spd(Matrix<T> a, std::vector<T> b) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (!(a(k, k) > 0))
      throw SingularSystemError("matrix is not positive definite (leading minor " + std::to_string(k + 1) + ")");
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const T f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      b[r] -= f * b[k];
    }
  }
  std::vector<T> x(n, T(0));
  for (std::size_t k = n; k-- > 0;) {
    T acc = b[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= a(k, c) * x[c];
    x[k] = acc / a(k, k);
  }
  return x;
}

/// Solves a square system with partial pivoting (first nonzero pivot in
/// exact arithmetic, largest magnitude in floating point).
template <CoefficientDomain T>
std::vector<T> solve_square(Matrix<T> a, std::vector<T> b) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    if constexpr (Poly<T>::is_exact) {
      for (std::size_t r = k; r < n && piv == n; ++r)
        if (a(r, k) != 0) piv = r;
    } else {
      double best = 0.0;
      for (std::size_t r = k; r < n; ++r)
        if (std::fabs(a(r, k)) > best) {
          best = std::fabs(a(r, k));
          piv = r;
        }
    }
    if (piv == n) throw SingularSystemError("singular linear system");
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      std::swap(b[k], b[piv]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const T f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      b[r] -= f * b[k];
    }
  }
  std::vector<T> x(n, T(0));
  for (std::size_t k = n; k-- > 0;) {
    T acc = b[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= a(k, c) * x[c];
    x[k] = acc / a(k, k);
  }
  return x;
}

/// Outcome of reducing a possibly rectangular exact system A x = b.
struct ExactSolveResult {
  bool consistent = false;
  std::size_t rank = 0;
  /// One solution (free variables set to zero) when consistent.
  std::vector<Rational> x;
};

ExactSolveResult solve_exact(Matrix<Rational> a, std::vector<Rational> b);

}  // namespace dsop
