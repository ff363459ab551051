#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dsop/parallel.hpp"
#include "dsop/sobolev.hpp"

namespace dsop {

struct RatioRow {
  std::size_t n = 0;
  std::complex<double> ratio;
  std::complex<double> limit;
  double abs_error = 0.0;
};

struct RatioReport {
  std::complex<double> x;
  std::vector<RatioRow> rows;
  /// Least-squares slope of log(error) against log(n); NaN with fewer
  /// than two rows of nonzero error.
  double exponent = 0.0;

  bool errors_strictly_decreasing() const;
};

/// Π_j (√(-x) - √|c_j|) / (√(-x) + √|c_j|), principal square root.
/// Throws PreconditionError for x on [0, ∞) or a nonnegative c_j.
std::complex<double> limit_product(std::complex<double> x, std::span<const Rational> cs);

/// Slope p of the fit error ≈ C n^p.
double fit_decay_exponent(std::span<const RatioRow> rows);

/// Rows S_n(x) / L_n(x) for each n, evaluated exactly and converted once.
/// Needs an exact Laguerre parameter, one derivative order per point and a
/// rational x < 0.
RatioReport ratio_trajectory(const SobolevSpec& spec, const Rational& x, std::span<const std::size_t> ns,
                             Exec exec = Exec::parallel);

/// Limits of P_{n,j}(x):
/// -2√|c_j| / (√(-x) + √|c_j|) Π_{l≠j} (√|c_j| + √|c_l|) / (√|c_j| - √|c_l|).
/// Throws PreconditionError when two |c_j| coincide.
std::vector<std::complex<double>> pj_limit(std::complex<double> x, std::span<const Rational> cs);

struct PjFinite {
  std::vector<Rational> exact;
  std::vector<double> values;
  /// Σ_j a_{k,j}(n, x) P_{n,j}(x) + 1 = 0 held exactly for every k.
  bool system_residual_zero = false;
  /// S_n(x) / L_n(x)
  Rational ratio;
};

/// P_{n,j}(x) = -λ_j S_n^{(d_j)}(c_j) K_{n-1}^{(0,d_j)}(x, c_j) / L_n(x) from
/// exact building blocks, with the substitution check against the system
/// in the a_{k,j}(n, x).
PjFinite pj_finite_n(const Rational& x, const SobolevSpec& spec, std::size_t n);

struct Corollary41Reports {
  /// S^{α+β}_{n+k} / (n^{k+β/2} L^α_n) → (-1)^k (√(-x))^{-β} Π
  RatioReport with_laguerre;
  /// S^{α+β}_{n+k} / (n^{k+β/2} S^α_n) → (-1)^k (√(-x))^{-β}
  RatioReport with_sobolev;
  /// (S^α_n)^{(ν)} / (L^α_n)^{(ν)} → Π
  RatioReport derivative;
};

/// Evaluates the three ratio families across ns. spec carries α; the
/// shifted parameter α+β must also be an integer >= 0. Requires
/// k >= -min(ns) and nu <= 3.
Corollary41Reports corollary41_check(const SobolevSpec& spec, long beta, long k, std::size_t nu, const Rational& x,
                                     std::span<const std::size_t> ns, Exec exec = Exec::parallel);

/// A_j = -2 t_j Π_{l≠j} (t_j + t_l) / (t_j - t_l).
std::vector<Rational> partial_fraction_coefficients(std::span<const Rational> ts);

/// Checks Π (z - t_j)/(z + t_j) = 1 + Σ A_j / (z + t_j) by clearing
/// denominators and comparing coefficients. Throws PreconditionError for
/// nonpositive or repeated t.
bool partial_fraction_check(std::span<const Rational> ts);

/// CSV with columns n, ratio_re, ratio_im, limit_re, limit_im, abs_error.
std::string to_csv(const RatioReport& report);

}  // namespace dsop
