#pragma once

#include <algorithm>
#include <complex>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dsop/errors.hpp"
#include "dsop/rational.hpp"

namespace dsop {

/// The two coefficient domains: exact rationals and IEEE doubles.
template <class T>
concept CoefficientDomain = std::same_as<T, Rational> || std::same_as<T, double>;

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The coefficient list never ends in a zero; the zero polynomial is the
/// empty list and has no degree. The domain is a template parameter, so
/// mixing an exact polynomial with a floating one (or evaluating an exact
/// polynomial at a double) does not compile.
template <CoefficientDomain T>
class Poly {
 public:
  using value_type = T;
  static constexpr bool is_exact = std::same_as<T, Rational>;

  Poly() = default;
  explicit Poly(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }
  Poly(std::initializer_list<T> ascending) : c_(ascending) { trim(); }

  static Poly constant(const T& value) { return Poly(std::vector<T>{value}); }

  static Poly monomial(std::size_t k, const T& coeff = T(1)) {
    std::vector<T> c(k + 1, T(0));
    c[k] = coeff;
    return Poly(std::move(c));
  }

  /// x - root
  static Poly linear_factor(const T& root) { return Poly(std::vector<T>{T(-root), T(1)}); }

  bool is_zero() const noexcept { return c_.empty(); }

  std::size_t degree() const {
    if (c_.empty()) throw PreconditionError("degree of the zero polynomial is undefined");
    return c_.size() - 1;
  }

  std::size_t size() const noexcept { return c_.size(); }
  std::span<const T> coeffs() const noexcept { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  const T& leading() const {
    if (c_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
    return c_.back();
  }

  /// Horner evaluation; the argument must be in the coefficient domain.
  template <std::same_as<T> U>
  T operator()(const U& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  /// k-th derivative; the zero polynomial when k > degree.
  Poly derivative(std::size_t k = 1) const {
    if (k == 0) return *this;
    if (k >= c_.size()) return Poly();
    std::vector<T> out(c_.size() - k);
    for (std::size_t i = k; i < c_.size(); ++i) {
      T f(1);
      for (std::size_t m = 0; m < k; ++m) f *= T(static_cast<long>(i - m));
      out[i - k] = c_[i] * f;
    }
    return Poly(std::move(out));
  }

  template <std::same_as<T> U>
  Poly scaled(const U& s) const {
    std::vector<T> out(c_);
    for (auto& v : out) v *= s;
    return Poly(std::move(out));
  }

  Poly operator-() const {
    std::vector<T> out(c_);
    for (auto& v : out) v = -v;
    return Poly(std::move(out));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using QPoly = Poly<Rational>;
using FPoly = Poly<double>;

/// Evaluates a floating polynomial at a complex point.
std::complex<double> eval_complex(const FPoly& p, std::complex<double> z);

/// Coefficient-wise conversion to double (saturating).
FPoly to_float(const QPoly& p);

/// Exact conversion: every finite double is a rational.
QPoly to_exact(const FPoly& p);

QPoly pow(const QPoly& base, unsigned e);

/// Division with remainder over Q. Throws PreconditionError on a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

QPoly monic(const QPoly& p);

/// Yun's squarefree decomposition of a nonzero polynomial: returns
/// {f_1, f_2, ...} with p = lc * prod f_i^i, every f_i monic, squarefree and
/// pairwise coprime (f_i = 1 when there is no root of multiplicity i).
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

/// p(x + shift), exact.
QPoly taylor_shift(const QPoly& p, const Rational& shift);

/// Serialization as ascending coefficient strings ("p/q" or "p" for exact,
/// 17 significant digits for floating).
std::vector<std::string> to_strings(const QPoly& p);
std::vector<std::string> to_strings(const FPoly& p);
QPoly qpoly_from_strings(std::span<const std::string> coeffs);

std::string format_double(double v);

}  // namespace dsop
