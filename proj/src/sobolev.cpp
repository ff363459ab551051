#include "dsop/sobolev.hpp"

#include <algorithm>
#include <set>

#include "dsop/errors.hpp"

namespace dsop {

SobolevSpec::SobolevSpec(Measure measure, std::vector<MassTerm> masses) : measure_(std::move(measure)) {
  const ExtInterval hull = support_hull();
  if (hull.is_empty()) throw ValidationError("measure hull must be nonempty");
  std::set<MassKey> seen;
  for (auto& m : masses) {
    if (m.lambda < 0) throw ValidationError("lambda must be nonnegative");
    if (m.lambda == 0) continue;
    if (hull.interior_contains(m.c))
      throw ValidationError("mass point " + to_string(m.c) + " lies in the interior of " + hull.to_string());
    if (!seen.insert({m.c, m.order}).second)
      throw ValidationError("duplicate mass term at c=" + to_string(m.c) + " order=" + std::to_string(m.order));
    masses_.push_back(std::move(m));
  }
  std::sort(masses_.begin(), masses_.end(),
            [](const MassTerm& a, const MassTerm& b) { return a.c < b.c || (a.c == b.c && a.order < b.order); });
  for (const auto& c : points()) {
    const bool at_endpoint = (hull.lo().is_finite() && hull.lo().value() == c) ||
                             (hull.hi().is_finite() && hull.hi().value() == c);
    const auto count = std::count_if(masses_.begin(), masses_.end(), [&](const MassTerm& m) { return m.c == c; });
    if (at_endpoint && count > 1)
      warnings_.push_back("point " + to_string(c) + " sits on the hull boundary with several derivative orders");
  }
}

const LaguerreParam& SobolevSpec::laguerre() const {
  if (!is_laguerre()) throw PreconditionError("operation needs a Laguerre measure");
  return std::get<LaguerreParam>(measure_);
}

long SobolevSpec::exact_alpha() const { return laguerre().exact_alpha(); }

std::size_t SobolevSpec::d() const {
  std::size_t total = 0;
  for (const auto& c : points()) total += max_order_at(c) + 1;
  return total;
}

std::vector<Rational> SobolevSpec::points() const {
  std::vector<Rational> out;
  for (const auto& m : masses_)
    if (out.empty() || out.back() != m.c) out.push_back(m.c);
  return out;
}

std::size_t SobolevSpec::max_order_at(const Rational& c) const {
  std::size_t best = 0;
  for (const auto& m : masses_)
    if (m.c == c) best = std::max(best, m.order);
  return best;
}

std::size_t SobolevSpec::max_order() const {
  std::size_t best = 0;
  for (const auto& m : masses_) best = std::max(best, m.order);
  return best;
}

ExtInterval SobolevSpec::support_hull() const {
  if (is_laguerre()) return ExtInterval::closed(Rational(0), ExtReal::plus_infinity());
  return std::get<MomentMeasure>(measure_).hull;
}

std::size_t SobolevSpec::moment_limit() const {
  if (is_laguerre()) return static_cast<std::size_t>(-1);
  const auto& m = std::get<MomentMeasure>(measure_).moments;
  return m.empty() ? 0 : m.size() - 1;
}

namespace {

void require_moment(const SobolevSpec& spec, std::size_t k) {
  if (spec.is_laguerre()) return;
  const auto& m = std::get<MomentMeasure>(spec.measure()).moments;
  if (k >= m.size()) throw PreconditionError("insufficient moments: m_" + std::to_string(k) + " required");
}

}  // namespace

template <CoefficientDomain T>
T SobolevSpec::moment(std::size_t k) const {
  require_moment(*this, k);
  if (is_laguerre()) {
    const auto& a = laguerre();
    if constexpr (Poly<T>::is_exact) {
      return laguerre_moment<Rational>(k, a);
    } else {
      if (a.is_exact()) return to_double(laguerre_moment<Rational>(k, a));
      return laguerre_moment<double>(k, a);
    }
  }
  const Rational& v = std::get<MomentMeasure>(measure_).moments[k];
  if constexpr (Poly<T>::is_exact)
    return v;
  else
    return to_double(v);
}

template Rational SobolevSpec::moment<Rational>(std::size_t) const;
template double SobolevSpec::moment<double>(std::size_t) const;

SobolevSpec SobolevSpec::with_alpha(const LaguerreParam& alpha) const { return SobolevSpec(alpha, masses_); }

SobolevSpec SobolevSpec::without_masses() const { return SobolevSpec(measure_, {}); }

namespace {

template <CoefficientDomain T>
T from_rational(const Rational& r) {
  if constexpr (Poly<T>::is_exact)
    return r;
  else
    return to_double(r);
}

// D^o(x^i)(c) = i!/(i-o)! c^{i-o} for i = 0..n.
std::vector<Rational> monomial_derivatives(const Rational& c, std::size_t o, std::size_t n) {
  std::vector<Rational> out(n + 1, Rational(0));
  Rational power = 1;
  for (std::size_t i = o; i <= n; ++i) {
    out[i] = Rational(falling_factorial(i, o)) * power;
    power *= c;
  }
  return out;
}

}  // namespace

template <CoefficientDomain T>
T measure_inner(const Poly<T>& p, const Poly<T>& q, const SobolevSpec& spec) {
  const Poly<T> pq = p * q;
  if (pq.is_zero()) return T(0);
  require_moment(spec, pq.degree());
  T acc(0);
  for (std::size_t t = 0; t < pq.size(); ++t) acc += pq.coeffs()[t] * spec.moment<T>(t);
  return acc;
}

template <CoefficientDomain T>
T sobolev_inner(const Poly<T>& p, const Poly<T>& q, const SobolevSpec& spec) {
  T acc = measure_inner(p, q, spec);
  for (const auto& m : spec.masses()) {
    const T c = from_rational<T>(m.c);
    acc += from_rational<T>(m.lambda) * p.derivative(m.order)(c) * q.derivative(m.order)(c);
  }
  return acc;
}

template Rational measure_inner<Rational>(const QPoly&, const QPoly&, const SobolevSpec&);
template double measure_inner<double>(const FPoly&, const FPoly&, const SobolevSpec&);
template Rational sobolev_inner<Rational>(const QPoly&, const QPoly&, const SobolevSpec&);
template double sobolev_inner<double>(const FPoly&, const FPoly&, const SobolevSpec&);

template <CoefficientDomain T>
Matrix<T> gram_matrix(std::size_t n, const SobolevSpec& spec, Exec exec) {
  require_moment(spec, 2 * n);
  const std::size_t size = n + 1;
  std::vector<T> moments(2 * n + 1);
  for (std::size_t t = 0; t <= 2 * n; ++t) moments[t] = spec.moment<T>(t);

  const auto& masses = spec.masses();
  std::vector<std::vector<T>> dv(masses.size());
  std::vector<T> lambdas(masses.size());
  for (std::size_t t = 0; t < masses.size(); ++t) {
    const auto exact = monomial_derivatives(masses[t].c, masses[t].order, n);
    dv[t].reserve(size);
    for (const auto& v : exact) dv[t].push_back(from_rational<T>(v));
    lambdas[t] = from_rational<T>(masses[t].lambda);
  }

  Matrix<T> g(size, size);
  auto row = [&](std::size_t k) {
    for (std::size_t i = k; i < size; ++i) {
      T v = moments[k + i];
      for (std::size_t t = 0; t < masses.size(); ++t)
        if (dv[t][k] != 0 && dv[t][i] != 0) v += lambdas[t] * dv[t][k] * dv[t][i];
      g(k, i) = v;
    }
  };
  if (exec == Exec::parallel) {
    const long rows = static_cast<long>(size);
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < rows; ++k) row(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < size; ++k) row(k);
  }
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < k; ++i) g(k, i) = g(i, k);
  return g;
}

template Matrix<Rational> gram_matrix<Rational>(std::size_t, const SobolevSpec&, Exec);
template Matrix<double> gram_matrix<double>(std::size_t, const SobolevSpec&, Exec);

template <CoefficientDomain T>
Poly<T> sobolev_poly(std::size_t n, const SobolevSpec& spec, Exec exec) {
  if (n == 0) return Poly<T>::constant(T(1));
  const Matrix<T> g = gram_matrix<T>(n, spec, exec);
  Matrix<T> a(n, n);
  std::vector<T> b(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) a(k, i) = g(k, i);
    b[k] = -g(k, n);
  }
  std::vector<T> coeffs = solve_spd(std::move(a), std::move(b));
  coeffs.push_back(T(1));
  return Poly<T>(std::move(coeffs));
}

template QPoly sobolev_poly<Rational>(std::size_t, const SobolevSpec&, Exec);
template FPoly sobolev_poly<double>(std::size_t, const SobolevSpec&, Exec);

QPoly rho_polynomial(const SobolevSpec& spec) {
  const ExtInterval hull = spec.support_hull();
  QPoly rho = QPoly::constant(Rational(1));
  for (const auto& c : spec.points()) {
    const auto e = static_cast<unsigned>(spec.max_order_at(c) + 1);
    const bool left = hull.lo().is_finite() && c <= hull.lo().value();
    const QPoly factor = left ? QPoly::linear_factor(c) : -QPoly::linear_factor(c);
    rho *= pow(factor, e);
  }
  return rho;
}

bool quasi_orthogonality_check(std::size_t n, const SobolevSpec& spec) {
  const std::size_t d = spec.d();
  if (n <= d)
    throw PreconditionError("quasi-orthogonality needs n > d (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  const QPoly s = sobolev_poly<Rational>(n, spec);
  const QPoly rho = rho_polynomial(spec);
  for (std::size_t t = 0; t + d < n; ++t)
    if (measure_inner(s, rho * QPoly::monomial(t), spec) != 0) return false;
  return true;
}

}  // namespace dsop
