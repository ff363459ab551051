#include "dsop/laguerre.hpp"

#include <cmath>
#include <numbers>

namespace dsop {

LaguerreParam LaguerreParam::exact(long alpha) {
  if (alpha <= -1) throw PreconditionError("Laguerre parameter must satisfy alpha > -1");
  if (alpha < 0) throw PreconditionError("exact Laguerre mode needs an integer alpha >= 0");
  return LaguerreParam(true, alpha, static_cast<double>(alpha));
}

LaguerreParam LaguerreParam::floating(double alpha) {
  if (!(alpha > -1.0)) throw PreconditionError("Laguerre parameter must satisfy alpha > -1");
  return LaguerreParam(false, 0, alpha);
}

long LaguerreParam::exact_alpha() const {
  if (!exact_) throw PreconditionError("exact arithmetic needs an integer Laguerre parameter");
  return integer_;
}

namespace {

template <CoefficientDomain T>
T alpha_as(const LaguerreParam& a) {
  if constexpr (Poly<T>::is_exact)
    return Rational(a.exact_alpha());
  else
    return a.value();
}

template <CoefficientDomain T>
T signed_inverse_factorial(std::size_t n) {
  if constexpr (Poly<T>::is_exact) {
    Rational f(Integer(1), factorial(n));
    return n % 2 == 0 ? f : Rational(-f);
  } else {
    const double f = std::exp(-std::lgamma(static_cast<double>(n) + 1.0));
    return n % 2 == 0 ? f : -f;
  }
}

}  // namespace

template <CoefficientDomain T>
std::vector<Poly<T>> monic_laguerre_family(std::size_t n, const LaguerreParam& alpha) {
  const T a = alpha_as<T>(alpha);
  std::vector<Poly<T>> out;
  out.reserve(n + 1);
  out.push_back(Poly<T>::constant(T(1)));
  const Poly<T> x = Poly<T>::monomial(1);
  for (std::size_t k = 0; k < n; ++k) {
    const T kk(static_cast<long>(k));
    const T b = T(2) * kk + a + T(1);
    Poly<T> next = (x - Poly<T>::constant(b)) * out[k];
    if (k > 0) {
      const T g = kk * (kk + a);
      next -= out[k - 1].scaled(g);
    }
    out.push_back(std::move(next));
  }
  return out;
}

template <CoefficientDomain T>
Poly<T> monic_laguerre(std::size_t n, const LaguerreParam& alpha) {
  return monic_laguerre_family<T>(n, alpha).back();
}

template <CoefficientDomain T>
Poly<T> classical_laguerre(std::size_t n, const LaguerreParam& alpha) {
  return monic_laguerre<T>(n, alpha).scaled(signed_inverse_factorial<T>(n));
}

template <CoefficientDomain T>
T laguerre_norm_sq(std::size_t n, const LaguerreParam& alpha) {
  if constexpr (Poly<T>::is_exact) {
    const long a = alpha.exact_alpha();
    return Rational(factorial(n) * factorial(n + static_cast<std::size_t>(a)));
  } else {
    return std::exp(log_laguerre_norm_sq(n, alpha));
  }
}

double log_laguerre_norm_sq(std::size_t n, const LaguerreParam& alpha) {
  const double nn = static_cast<double>(n);
  return std::lgamma(nn + 1.0) + std::lgamma(nn + alpha.value() + 1.0);
}

template <CoefficientDomain T>
T laguerre_moment(std::size_t k, const LaguerreParam& alpha) {
  if constexpr (Poly<T>::is_exact) {
    return Rational(factorial(k + static_cast<std::size_t>(alpha.exact_alpha())));
  } else {
    return std::exp(std::lgamma(alpha.value() + static_cast<double>(k) + 1.0));
  }
}

template std::vector<QPoly> monic_laguerre_family<Rational>(std::size_t, const LaguerreParam&);
template std::vector<FPoly> monic_laguerre_family<double>(std::size_t, const LaguerreParam&);
template QPoly monic_laguerre<Rational>(std::size_t, const LaguerreParam&);
template FPoly monic_laguerre<double>(std::size_t, const LaguerreParam&);
template QPoly classical_laguerre<Rational>(std::size_t, const LaguerreParam&);
template FPoly classical_laguerre<double>(std::size_t, const LaguerreParam&);
template Rational laguerre_norm_sq<Rational>(std::size_t, const LaguerreParam&);
template double laguerre_norm_sq<double>(std::size_t, const LaguerreParam&);
template Rational laguerre_moment<Rational>(std::size_t, const LaguerreParam&);
template double laguerre_moment<double>(std::size_t, const LaguerreParam&);

std::complex<double> perron_leading(std::size_t n, double alpha, std::complex<double> x) {
  if (x.imag() == 0.0 && x.real() >= 0.0) throw PreconditionError("Perron asymptotics undefined on [0, inf)");
  const double nn = static_cast<double>(n);
  const std::complex<double> minus_x = -x;
  // Sum of logarithms, exponentiated once, to stay in range for large n.
  const std::complex<double> log_value = x / 2.0 + (alpha / 2.0 - 0.25) * std::log(nn) +
                                         2.0 * std::sqrt(nn) * std::sqrt(minus_x) -
                                         std::log(2.0 * std::sqrt(std::numbers::pi)) -
                                         (alpha / 2.0 + 0.25) * std::log(minus_x);
  return std::exp(log_value);
}

LaguerreValues::LaguerreValues(long alpha, const Rational& x, std::size_t n, std::size_t max_order)
    : n_(n), orders_(max_order), x_(x), v_((n + 1) * (max_order + 1)) {
  if (alpha < 0) throw PreconditionError("exact Laguerre values need an integer alpha >= 0");
  const std::size_t w = orders_ + 1;
  v_[0] = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    const Rational b(static_cast<long>(2 * i + 1) + alpha);
    const Rational g(Integer(static_cast<unsigned long>(i)) * (static_cast<long>(i) + alpha));
    const Rational shifted = x_ - b;
    for (std::size_t m = 0; m <= orders_; ++m) {
      Rational v = shifted * v_[i * w + m];
      if (m > 0) v += Rational(static_cast<long>(m)) * v_[i * w + m - 1];
      if (i > 0) v -= g * v_[(i - 1) * w + m];
      v_[(i + 1) * w + m] = std::move(v);
    }
  }
}

Rational classical_laguerre_value(std::size_t n, long alpha, const Rational& x) {
  Rational prev = 1;
  if (n == 0) return prev;
  Rational cur = Rational(1 + alpha) - x;
  for (std::size_t k = 1; k < n; ++k) {
    const long kk = static_cast<long>(k);
    Rational next = (Rational(2 * kk + alpha + 1) - x) * cur - Rational(kk + alpha) * prev;
    next /= Rational(kk + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Rational> inverse_norms(std::size_t n, long alpha) {
  std::vector<Rational> out;
  out.reserve(n + 1);
  Integer fi = 1;                                                // i!
  Integer fa = factorial(static_cast<unsigned long>(alpha));     // (i+α)!
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) {
      fi *= static_cast<unsigned long>(i);
      fa *= static_cast<unsigned long>(i + static_cast<std::size_t>(alpha));
    }
    out.emplace_back(Integer(1), fi * fa);
  }
  for (auto& r : out) r.canonicalize();
  return out;
}

}  // namespace dsop
