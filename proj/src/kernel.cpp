#include <omp.h>

#include <optional>

#include "dsop/errors.hpp"
#include "dsop/sobolev.hpp"

namespace dsop {

namespace {

// Σ_{i<count} a(i, j) b(i, k) w_i
Rational kernel_sum(const LaguerreValues& a, std::size_t j, const LaguerreValues& b, std::size_t k,
                    const std::vector<Rational>& w, std::size_t count) {
  Rational acc = 0;
  for (std::size_t i = 0; i < count; ++i) acc += a(i, j) * b(i, k) * w[i];
  return acc;
}

struct PointTables {
  std::vector<Rational> points;
  std::vector<LaguerreValues> tables;

  const LaguerreValues& at(const Rational& c) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == c) return tables[i];
    throw PreconditionError("no table for point " + to_string(c));
  }
};

PointTables build_tables(const SobolevSpec& spec, std::size_t n, long alpha, Exec exec) {
  PointTables out;
  out.points = spec.points();
  const std::size_t orders = spec.max_order();
  const long count = static_cast<long>(out.points.size());
  std::vector<std::optional<LaguerreValues>> slots(out.points.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) slots[i].emplace(alpha, out.points[i], n, orders);
  } else {
    for (long i = 0; i < count; ++i) slots[i].emplace(alpha, out.points[i], n, orders);
  }
  for (auto& s : slots) out.tables.push_back(std::move(*s));
  return out;
}

}  // namespace

KernelEval kernel_eval(std::size_t n, std::size_t j, std::size_t k, const Rational& x, const Rational& y, long alpha,
                       Exec exec) {
  const LaguerreValues vx(alpha, x, n, j);
  const LaguerreValues vy(alpha, y, n, k);
  const std::vector<Rational> w = inverse_norms(n, alpha);
  KernelEval out{n, j, k, x, y, Rational(0)};
  if (exec == Exec::serial) {
    out.value = kernel_sum(vx, j, vy, k, w, n + 1);
    return out;
  }
  // Per-thread partial sums; rational addition is exact, so any grouping
  // gives the serial result bit for bit.
  std::vector<Rational> partial(static_cast<std::size_t>(omp_get_max_threads()), Rational(0));
  const long terms = static_cast<long>(n + 1);
#pragma omp parallel
  {
    Rational& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long i = 0; i < terms; ++i) acc += vx(i, j) * vy(i, k) * w[i];
  }
  for (const auto& p : partial) out.value += p;
  return out;
}

Rational cd_kernel(std::size_t n, const Rational& x, const Rational& y, long alpha) {
  const auto lp = LaguerreParam::exact(alpha);
  const auto family = monic_laguerre_family<Rational>(n + 1, lp);
  const QPoly& pn = family[n];
  const QPoly& pn1 = family[n + 1];
  const Rational h = laguerre_norm_sq<Rational>(n, lp);
  if (x != y) return (pn1(x) * pn(y) - pn1(y) * pn(x)) / (h * (x - y));
  return (pn1.derivative()(x) * pn(x) - pn1(x) * pn.derivative()(x)) / h;
}

QPoly kernel_poly(std::size_t n, std::size_t k, const Rational& y, long alpha) {
  const auto family = monic_laguerre_family<Rational>(n, LaguerreParam::exact(alpha));
  const LaguerreValues vy(alpha, y, n, k);
  const std::vector<Rational> w = inverse_norms(n, alpha);
  QPoly out;
  for (std::size_t i = 0; i <= n; ++i) out += family[i].scaled(Rational(vy(i, k) * w[i]));
  return out;
}

std::map<MassKey, Rational> connection_solve(std::size_t n, const SobolevSpec& spec, Exec exec) {
  const long alpha = spec.exact_alpha();
  const auto& masses = spec.masses();
  const std::size_t m = masses.size();
  std::map<MassKey, Rational> out;
  if (m == 0) return out;

  const PointTables tables = build_tables(spec, n, alpha, exec);
  const std::vector<Rational> w = inverse_norms(n, alpha);

  // Row (c_i, l): Σ_t [δ + λ_t K_{n-1}^{(l,k_t)}(c_i, c_t)] S^{(k_t)}(c_t) = L_n^{(l)}(c_i).
  Matrix<Rational> a(m, m);
  std::vector<Rational> b(m);
  auto entry = [&](std::size_t r, std::size_t t) {
    const auto& row = masses[r];
    const auto& col = masses[t];
    Rational v = col.lambda * kernel_sum(tables.at(row.c), row.order, tables.at(col.c), col.order, w, n);
    if (r == t) v += 1;
    a(r, t) = std::move(v);
  };
  const long cells = static_cast<long>(m * m);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long e = 0; e < cells; ++e) entry(static_cast<std::size_t>(e) / m, static_cast<std::size_t>(e) % m);
  } else {
    for (long e = 0; e < cells; ++e) entry(static_cast<std::size_t>(e) / m, static_cast<std::size_t>(e) % m);
  }
  for (std::size_t r = 0; r < m; ++r) b[r] = tables.at(masses[r].c)(n, masses[r].order);

  const std::vector<Rational> x = solve_square(std::move(a), std::move(b));
  for (std::size_t t = 0; t < m; ++t) out.emplace(MassKey{masses[t].c, masses[t].order}, x[t]);
  return out;
}

QPoly sobolev_poly_via_kernel(std::size_t n, const SobolevSpec& spec, Exec exec) {
  const long alpha = spec.exact_alpha();
  const auto family = monic_laguerre_family<Rational>(n, LaguerreParam::exact(alpha));
  if (spec.masses().empty()) return family[n];

  const auto values = connection_solve(n, spec, exec);
  const PointTables tables = build_tables(spec, n, alpha, exec);
  const std::vector<Rational> w = inverse_norms(n, alpha);

  QPoly s = family[n];
  for (std::size_t i = 0; i < n; ++i) {
    Rational coeff = 0;
    for (const auto& m : spec.masses())
      coeff += m.lambda * values.at({m.c, m.order}) * tables.at(m.c)(i, m.order);
    coeff *= w[i];
    if (coeff != 0) s -= family[i].scaled(coeff);
  }
  return s;
}

QPoly sobolev_poly_exact(std::size_t n, const SobolevSpec& spec, Exec exec) {
  if (spec.is_laguerre() && spec.laguerre().is_exact()) return sobolev_poly_via_kernel(n, spec, exec);
  return sobolev_poly<Rational>(n, spec, exec);
}

Rational sobolev_value_via_kernel(std::size_t n, const SobolevSpec& spec, const std::map<MassKey, Rational>& values,
                                  const Rational& x, std::size_t nu) {
  const long alpha = spec.exact_alpha();
  const LaguerreValues vx(alpha, x, n, nu);
  Rational s = vx(n, nu);
  if (spec.masses().empty()) return s;
  const std::vector<Rational> w = inverse_norms(n, alpha);
  for (const auto& m : spec.masses()) {
    const LaguerreValues vc(alpha, m.c, n, m.order);
    s -= m.lambda * values.at({m.c, m.order}) * kernel_sum(vx, nu, vc, m.order, w, n);
  }
  return s;
}

}  // namespace dsop
