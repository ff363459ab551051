#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dsop/interval.hpp"
#include "dsop/laguerre.hpp"
#include "dsop/linalg.hpp"
#include "dsop/parallel.hpp"
#include "dsop/poly.hpp"

namespace dsop {

/// One term λ f^{(order)}(c) g^{(order)}(c) of the discrete part.
struct MassTerm {
  Rational c;
  std::size_t order = 0;
  Rational lambda;

  friend bool operator==(const MassTerm&, const MassTerm&) = default;
};

/// A measure given by its moments m_0..m_K and a declared convex hull of
/// its support. Nothing is inferred from the moments themselves.
struct MomentMeasure {
  std::vector<Rational> moments;
  ExtInterval hull;

  friend bool operator==(const MomentMeasure&, const MomentMeasure&) = default;
};

using Measure = std::variant<LaguerreParam, MomentMeasure>;

/// Identifies an unknown S^{(order)}(c) of the connection system.
using MassKey = std::pair<Rational, std::size_t>;

/// ∫ f g dμ + Σ λ_{j,k} f^{(k)}(c_j) g^{(k)}(c_j).
///
/// Construction validates: negative λ is rejected, λ = 0 terms are dropped,
/// a mass strictly inside the hull of supp μ is rejected, and a repeated
/// (c, order) pair is rejected. Masses are kept sorted by (c, order).
class SobolevSpec {
 public:
  /// Throws ValidationError.
  SobolevSpec(Measure measure, std::vector<MassTerm> masses);

  const Measure& measure() const noexcept { return measure_; }
  bool is_laguerre() const noexcept { return std::holds_alternative<LaguerreParam>(measure_); }
  /// Throws PreconditionError for a moment measure.
  const LaguerreParam& laguerre() const;
  /// Exact Laguerre parameter; throws PreconditionError otherwise.
  long exact_alpha() const;

  const std::vector<MassTerm>& masses() const noexcept { return masses_; }
  /// Number of terms with λ > 0.
  std::size_t d_star() const noexcept { return masses_.size(); }
  /// Σ (d_j + 1) over the distinct points; the degree of ρ.
  std::size_t d() const;
  /// Distinct mass points, ascending.
  std::vector<Rational> points() const;
  /// Highest derivative order carried by the point c (d_j).
  std::size_t max_order_at(const Rational& c) const;
  /// Highest derivative order overall; 0 without masses.
  std::size_t max_order() const;
  /// ch(supp μ): [0, ∞) for Laguerre, the declared hull otherwise.
  ExtInterval support_hull() const;

  /// Highest moment index available (unbounded for Laguerre).
  std::size_t moment_limit() const;
  /// m_k; throws PreconditionError naming k when it is not supplied.
  template <CoefficientDomain T>
  T moment(std::size_t k) const;

  /// Same masses, different Laguerre parameter.
  SobolevSpec with_alpha(const LaguerreParam& alpha) const;
  SobolevSpec without_masses() const;

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  Measure measure_;
  std::vector<MassTerm> masses_;
  std::vector<std::string> warnings_;
};

/// ⟨p, q⟩_s. The measure part is Σ_t (p q)_t m_t.
template <CoefficientDomain T>
T sobolev_inner(const Poly<T>& p, const Poly<T>& q, const SobolevSpec& spec);

/// ∫ p q dμ only.
template <CoefficientDomain T>
T measure_inner(const Poly<T>& p, const Poly<T>& q, const SobolevSpec& spec);

/// (n+1)×(n+1) matrix of ⟨x^k, x^i⟩_s.
template <CoefficientDomain T>
Matrix<T> gram_matrix(std::size_t n, const SobolevSpec& spec, Exec exec = Exec::parallel);

/// Monic S_n with ⟨x^k, S_n⟩_s = 0 for k < n, from the Gram system. The
/// elimination asserts positive definiteness (SingularSystemError otherwise).
template <CoefficientDomain T>
Poly<T> sobolev_poly(std::size_t n, const SobolevSpec& spec, Exec exec = Exec::parallel);

/// K_n^{(j,k)}(x, y) for the monic Laguerre family.
struct KernelEval {
  std::size_t n = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational x;
  Rational y;
  Rational value;
};

/// Σ_{i=0}^{n} L_i^{(j)}(x) L_i^{(k)}(y) / ‖L_i‖², exact, integer α >= 0.
KernelEval kernel_eval(std::size_t n, std::size_t j, std::size_t k, const Rational& x, const Rational& y,
                       long alpha, Exec exec = Exec::parallel);

/// Christoffel–Darboux closed form of K_n(x, y), including the confluent
/// case x = y. Built from the monic polynomials, independent of kernel_eval.
Rational cd_kernel(std::size_t n, const Rational& x, const Rational& y, long alpha);

/// The polynomial K_n(x, y) in x for fixed y, with its k-th y-derivative:
/// Σ_i L_i(x) L_i^{(k)}(y) / ‖L_i‖².
QPoly kernel_poly(std::size_t n, std::size_t k, const Rational& y, long alpha);

/// Values S_n^{(k)}(c_j) for every mass term, from the d*×d* connection
/// system. Laguerre measure with an exact parameter.
std::map<MassKey, Rational> connection_solve(std::size_t n, const SobolevSpec& spec, Exec exec = Exec::parallel);

/// S_n = L_n - Σ λ_{j,k} S_n^{(k)}(c_j) K_{n-1}^{(0,k)}(x, c_j).
QPoly sobolev_poly_via_kernel(std::size_t n, const SobolevSpec& spec, Exec exec = Exec::parallel);

/// S_n^{(nu)}(x) through the connection formula without forming S_n. Suited
/// to large n. Pass the output of connection_solve for the same n and spec.
Rational sobolev_value_via_kernel(std::size_t n, const SobolevSpec& spec, const std::map<MassKey, Rational>& values,
                                  const Rational& x, std::size_t nu = 0);

/// Exact S_n by the cheaper route: the connection formula for an exact
/// Laguerre measure, the Gram system otherwise. Both give the same
/// polynomial.
QPoly sobolev_poly_exact(std::size_t n, const SobolevSpec& spec, Exec exec = Exec::parallel);

/// ρ(x) = Π_{c_j <= a} (x - c_j)^{d_j+1} Π_{c_j >= b} (c_j - x)^{d_j+1}.
/// A point equal to a shared finite endpoint goes to the left product.
QPoly rho_polynomial(const SobolevSpec& spec);

/// ⟨S_n, ρ x^t⟩_μ = 0 for t = 0..n-d-1. Throws PreconditionError when n <= d.
bool quasi_orthogonality_check(std::size_t n, const SobolevSpec& spec);

}  // namespace dsop
