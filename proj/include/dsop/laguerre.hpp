#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "dsop/poly.hpp"

namespace dsop {

/// Laguerre parameter α > -1 of the weight x^α e^{-x} on (0, ∞).
///
/// Exact mode needs α to be a nonnegative integer: then every moment and
/// norm is an integer, while Γ(α+1) is irrational for other rational α.
class LaguerreParam {
 public:
  /// Throws PreconditionError unless alpha >= 0.
  static LaguerreParam exact(long alpha);
  /// Throws PreconditionError unless alpha > -1.
  static LaguerreParam floating(double alpha);

  bool is_exact() const noexcept { return exact_; }
  /// Throws PreconditionError for a floating parameter.
  long exact_alpha() const;
  double value() const noexcept { return value_; }

  friend bool operator==(const LaguerreParam& a, const LaguerreParam& b) {
    return a.exact_ == b.exact_ && a.value_ == b.value_;
  }

 private:
  LaguerreParam(bool exact, long integer, double value) : exact_(exact), integer_(integer), value_(value) {}
  bool exact_;
  long integer_;
  double value_;
};

/// Monic L^α_n from the three-term recurrence
/// x L_k = L_{k+1} + (2k+α+1) L_k + k(k+α) L_{k-1}.
/// Rational coefficients require an exact parameter. Floating coefficients
/// lose accuracy quickly beyond n ≈ 150.
template <CoefficientDomain T>
Poly<T> monic_laguerre(std::size_t n, const LaguerreParam& alpha);

/// L^α_0 .. L^α_n (monic).
template <CoefficientDomain T>
std::vector<Poly<T>> monic_laguerre_family(std::size_t n, const LaguerreParam& alpha);

/// Classically normalized L_n^{(α)} = ((-1)^n / n!) L^α_n.
template <CoefficientDomain T>
Poly<T> classical_laguerre(std::size_t n, const LaguerreParam& alpha);

/// Squared norm of the monic polynomial, n! Γ(n+α+1). The floating version
/// goes through lgamma and overflows to inf for large n; see
/// log_laguerre_norm_sq.
template <CoefficientDomain T>
T laguerre_norm_sq(std::size_t n, const LaguerreParam& alpha);

double log_laguerre_norm_sq(std::size_t n, const LaguerreParam& alpha);

/// m_k = Γ(α+k+1), the k-th moment of x^α e^{-x} dx.
template <CoefficientDomain T>
T laguerre_moment(std::size_t k, const LaguerreParam& alpha);

/// Leading term of the outer asymptotics of L_n^{(α)}(x) off [0, ∞):
/// e^{x/2} n^{α/2-1/4} e^{2 sqrt(-n x)} / (2 sqrt(π) (-x)^{α/2+1/4}),
/// principal branches. Throws PreconditionError for x on [0, ∞).
std::complex<double> perron_leading(std::size_t n, double alpha, std::complex<double> x);

/// Table of monic L^α_i{}^{(m)}(x), i = 0..n, m = 0..max_order, built by
/// differentiating the recurrence:
/// L_{i+1}^{(m)} = (x - b_i) L_i^{(m)} + m L_i^{(m-1)} - g_i L_{i-1}^{(m)}.
class LaguerreValues {
 public:
  LaguerreValues(long alpha, const Rational& x, std::size_t n, std::size_t max_order);

  const Rational& operator()(std::size_t i, std::size_t m) const { return v_[i * (orders_ + 1) + m]; }
  std::size_t degree() const noexcept { return n_; }
  std::size_t max_order() const noexcept { return orders_; }
  const Rational& point() const noexcept { return x_; }

 private:
  std::size_t n_;
  std::size_t orders_;
  Rational x_;
  std::vector<Rational> v_;
};

/// Classical L_n^{(α)}(x) by its own recurrence
/// (k+1) L_{k+1} = (2k+α+1-x) L_k - (k+α) L_{k-1}.
Rational classical_laguerre_value(std::size_t n, long alpha, const Rational& x);

/// 1 / (i! (i+α)!) for i = 0..n: reciprocal monic norms.
std::vector<Rational> inverse_norms(std::size_t n, long alpha);

}  // namespace dsop
