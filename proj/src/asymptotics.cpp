#include "dsop/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "dsop/errors.hpp"
#include "dsop/laguerre.hpp"

namespace dsop {

bool RatioReport::errors_strictly_decreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].abs_error < rows[i - 1].abs_error)) return false;
  return true;
}

namespace {

std::complex<double> principal_sqrt_neg(std::complex<double> x) {
  if (x.imag() == 0.0 && x.real() >= 0.0) throw PreconditionError("x must lie off [0, inf)");
  return std::sqrt(-x);
}

std::vector<double> sqrt_abs(std::span<const Rational> cs) {
  std::vector<double> out;
  out.reserve(cs.size());
  for (const auto& c : cs) {
    if (c >= 0) throw PreconditionError("mass points must be negative");
    out.push_back(std::sqrt(-to_double(c)));
  }
  return out;
}

void require_sip_shape(const SobolevSpec& spec) {
  spec.exact_alpha();
  if (spec.points().size() != spec.masses().size())
    throw PreconditionError("asymptotics needs one derivative order per mass point");
  for (const auto& m : spec.masses())
    if (m.c >= 0) throw PreconditionError("asymptotics needs negative mass points");
}

void require_negative(const Rational& x) {
  if (x >= 0) throw PreconditionError("x must be negative");
}

// S_n^{(nu)}(x) exactly.
Rational sobolev_value(std::size_t n, const SobolevSpec& spec, const Rational& x, std::size_t nu) {
  return sobolev_value_via_kernel(n, spec, connection_solve(n, spec, Exec::serial), x, nu);
}

// Monic (L^α_n)^{(nu)}(x).
Rational laguerre_value(std::size_t n, long alpha, const Rational& x, std::size_t nu = 0) {
  return LaguerreValues(alpha, x, n, nu)(n, nu);
}

// Runs f(i) for every row index; exceptions are rethrown after the loop.
template <class F>
void for_rows(std::size_t count, Exec exec, F&& f) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::optional<std::string>> errors(count);
  const long total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (e) throw Error(*e);
}

void finish(RatioReport& report) {
  for (auto& row : report.rows) row.abs_error = std::abs(row.ratio - row.limit);
  report.exponent = fit_decay_exponent(report.rows);
}

}  // namespace

std::complex<double> limit_product(std::complex<double> x, std::span<const Rational> cs) {
  const std::complex<double> z = principal_sqrt_neg(x);
  std::complex<double> out = 1.0;
  for (double t : sqrt_abs(cs)) out *= (z - t) / (z + t);
  return out;
}

double fit_decay_exponent(std::span<const RatioRow> rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows)
    if (r.abs_error > 0 && std::isfinite(r.abs_error) && r.n > 0)
      pts.emplace_back(std::log(static_cast<double>(r.n)), std::log(r.abs_error));
  if (pts.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0, my = 0;
  for (const auto& [a, b] : pts) {
    mx += a;
    my += b;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0, sxx = 0;
  for (const auto& [a, b] : pts) {
    sxy += (a - mx) * (b - my);
    sxx += (a - mx) * (a - mx);
  }
  return sxx == 0 ? std::numeric_limits<double>::quiet_NaN() : sxy / sxx;
}

RatioReport ratio_trajectory(const SobolevSpec& spec, const Rational& x, std::span<const std::size_t> ns, Exec exec) {
  require_sip_shape(spec);
  require_negative(x);
  const long alpha = spec.exact_alpha();
  const auto points = spec.points();
  RatioReport report;
  report.x = to_double(x);
  const std::complex<double> limit = limit_product(report.x, points);
  report.rows.resize(ns.size());
  for_rows(ns.size(), exec, [&](std::size_t i) {
    const std::size_t n = ns[i];
    const Rational l = laguerre_value(n, alpha, x);
    if (l == 0) throw Error("L_n(x) vanished at negative x");
    report.rows[i] = {n, to_double(Rational(sobolev_value(n, spec, x, 0) / l)), limit, 0.0};
  });
  finish(report);
  return report;
}

std::vector<std::complex<double>> pj_limit(std::complex<double> x, std::span<const Rational> cs) {
  const std::complex<double> z = principal_sqrt_neg(x);
  const auto t = sqrt_abs(cs);
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b)
      if (cs[a] == cs[b]) throw PreconditionError("P_j limits need distinct |c_j|");
  std::vector<std::complex<double>> out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    std::complex<double> v = -2.0 * t[j] / (z + t[j]);
    for (std::size_t l = 0; l < t.size(); ++l)
      if (l != j) v *= (t[j] + t[l]) / (t[j] - t[l]);
    out.push_back(v);
  }
  return out;
}

PjFinite pj_finite_n(const Rational& x, const SobolevSpec& spec, std::size_t n) {
  require_sip_shape(spec);
  require_negative(x);
  const long alpha = spec.exact_alpha();
  const auto& masses = spec.masses();
  const std::size_t m = masses.size();
  if (n <= spec.max_order()) throw PreconditionError("P_{n,j} needs n greater than every derivative order");

  const auto values = connection_solve(n, spec, Exec::serial);
  const Rational lx = laguerre_value(n, alpha, x);
  auto kernel = [&](std::size_t j, std::size_t k, const Rational& a, const Rational& b) {
    return kernel_eval(n - 1, j, k, a, b, alpha, Exec::serial).value;
  };

  PjFinite out;
  std::vector<Rational> kx(m);
  for (std::size_t j = 0; j < m; ++j) {
    kx[j] = kernel(0, masses[j].order, x, masses[j].c);
    out.exact.push_back(-masses[j].lambda * values.at({masses[j].c, masses[j].order}) * kx[j] / lx);
    out.values.push_back(to_double(out.exact.back()));
  }

  out.system_residual_zero = true;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t dk = masses[k].order;
    const Rational ldk = laguerre_value(n, alpha, masses[k].c, dk);
    Rational row = 1;
    for (std::size_t j = 0; j < m; ++j) {
      Rational kk = kernel(dk, masses[j].order, masses[k].c, masses[j].c);
      if (j == k) kk += 1 / masses[k].lambda;
      row += lx * kk / (ldk * kx[j]) * out.exact[j];
    }
    if (row != 0) out.system_residual_zero = false;
  }

  Rational sum = 1;
  for (const auto& p : out.exact) sum += p;
  out.ratio = sum;
  return out;
}

Corollary41Reports corollary41_check(const SobolevSpec& spec, long beta, long k, std::size_t nu, const Rational& x,
                                     std::span<const std::size_t> ns, Exec exec) {
  require_sip_shape(spec);
  require_negative(x);
  if (nu > 3) throw PreconditionError("derivative order nu must be at most 3");
  const long alpha = spec.exact_alpha();
  const SobolevSpec shifted = spec.with_alpha(LaguerreParam::exact(alpha + beta));
  for (std::size_t n : ns) {
    if (static_cast<long>(n) + k < 0) throw PreconditionError("k must be at least -n");
    if (n < nu) throw PreconditionError("derivative ratio needs n >= nu");
  }

  const auto points = spec.points();
  const double xd = to_double(x);
  const std::complex<double> product = limit_product(xd, points);
  const double shift = (k % 2 == 0 ? 1.0 : -1.0) * std::pow(std::sqrt(-xd), -static_cast<double>(beta));

  Corollary41Reports out;
  for (RatioReport* r : {&out.with_laguerre, &out.with_sobolev, &out.derivative}) {
    r->x = xd;
    r->rows.resize(ns.size());
  }
  for_rows(ns.size(), exec, [&](std::size_t i) {
    const std::size_t n = ns[i];
    const double nd = static_cast<double>(n);
    const std::size_t nk = static_cast<std::size_t>(static_cast<long>(n) + k);
    const Rational top = sobolev_value(nk, shifted, x, 0);
    const Rational l = laguerre_value(n, alpha, x);
    const Rational s = sobolev_value(n, spec, x, 0);
    // n^{k} is applied exactly; the half-integer power n^{β/2} in floating point.
    Rational scale = k >= 0 ? Rational(pow(Rational(static_cast<long>(n)), static_cast<unsigned long>(k)))
                            : Rational(1 / pow(Rational(static_cast<long>(n)), static_cast<unsigned long>(-k)));
    const double half = std::pow(nd, -static_cast<double>(beta) / 2.0);
    out.with_laguerre.rows[i] = {n, to_double(Rational(top / (scale * l))) * half, shift * product, 0.0};
    out.with_sobolev.rows[i] = {n, to_double(Rational(top / (scale * s))) * half, shift, 0.0};
    const Rational sd = nu == 0 ? s : sobolev_value(n, spec, x, nu);
    const Rational ld = laguerre_value(n, alpha, x, nu);
    out.derivative.rows[i] = {n, to_double(Rational(sd / ld)), product, 0.0};
  });
  finish(out.with_laguerre);
  finish(out.with_sobolev);
  finish(out.derivative);
  return out;
}

std::vector<Rational> partial_fraction_coefficients(std::span<const Rational> ts) {
  for (std::size_t a = 0; a < ts.size(); ++a) {
    if (ts[a] <= 0) throw PreconditionError("t values must be positive");
    for (std::size_t b = a + 1; b < ts.size(); ++b)
      if (ts[a] == ts[b]) throw PreconditionError("t values must be distinct");
  }
  std::vector<Rational> out;
  for (std::size_t j = 0; j < ts.size(); ++j) {
    Rational a = -2 * ts[j];
    for (std::size_t l = 0; l < ts.size(); ++l)
      if (l != j) a *= (ts[j] + ts[l]) / (ts[j] - ts[l]);
    out.push_back(a);
  }
  return out;
}

bool partial_fraction_check(std::span<const Rational> ts) {
  const auto a = partial_fraction_coefficients(ts);
  // Multiply both sides by Q(z) = Π (z + t_j).
  QPoly lhs = QPoly::constant(Rational(1));
  QPoly q = QPoly::constant(Rational(1));
  for (const auto& t : ts) {
    lhs *= QPoly::linear_factor(t);
    q *= QPoly::linear_factor(Rational(-t));
  }
  QPoly rhs = q;
  for (std::size_t j = 0; j < ts.size(); ++j) {
    QPoly others = QPoly::constant(a[j]);
    for (std::size_t l = 0; l < ts.size(); ++l)
      if (l != j) others *= QPoly::linear_factor(Rational(-ts[l]));
    rhs += others;
  }
  return lhs == rhs;
}

std::string to_csv(const RatioReport& report) {
  std::ostringstream out;
  out << "n,ratio_re,ratio_im,limit_re,limit_im,abs_error\n";
  for (const auto& r : report.rows)
    out << r.n << ',' << format_double(r.ratio.real()) << ',' << format_double(r.ratio.imag()) << ','
        << format_double(r.limit.real()) << ',' << format_double(r.limit.imag()) << ',' << format_double(r.abs_error)
        << '\n';
  return out.str();
}

}  // namespace dsop
