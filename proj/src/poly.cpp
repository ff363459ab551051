#include "dsop/poly.hpp"

#include <cstdio>

#include "zpoly.hpp"

namespace dsop {

std::complex<double> eval_complex(const FPoly& p, std::complex<double> z) {
  std::complex<double> acc(0.0);
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

FPoly to_float(const QPoly& p) {
  std::vector<double> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.push_back(to_double(v));
  return FPoly(std::move(c));
}

QPoly to_exact(const FPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (double v : p.coeffs()) c.emplace_back(v);
  return QPoly(std::move(c));
}

QPoly pow(const QPoly& base, unsigned e) {
  QPoly out = QPoly::constant(1);
  QPoly b = base;
  while (e > 0) {
    if (e & 1U) out *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.is_zero() || a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = b.degree();
  std::vector<Rational> quo(a.degree() - db + 1);
  const Rational& lb = b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + db] / lb;
    if (q != 0)
      for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q * b.coeffs()[i];
    quo[k] = std::move(q);
  }
  rem.resize(db);
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  const Rational inv = 1 / p.leading();
  return p.scaled(inv);
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  detail::ZPoly x = detail::primitive_part(a);
  detail::ZPoly y = detail::primitive_part(b);
  if (detail::coprime_modular(x, y)) return QPoly::constant(Rational(1));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    detail::ZPoly r = detail::pseudo_remainder(x, y);
    detail::make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(detail::to_qpoly(x));
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  if (p.is_zero()) throw PreconditionError("squarefree decomposition of the zero polynomial");
  std::vector<QPoly> out;
  const QPoly f = monic(p);
  if (f.degree() == 0) return out;
  const QPoly fp = f.derivative();
  const QPoly a0 = gcd(f, fp);
  QPoly b = divmod(f, a0).first;
  QPoly c = divmod(fp, a0).first;
  QPoly d = c - b.derivative();
  while (b.degree() > 0) {
    QPoly a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    out.push_back(monic(a));
  }
  return out;
}

QPoly taylor_shift(const QPoly& p, const Rational& shift) {
  if (p.is_zero()) return p;
  // Integer work throughout: with s = u/v and common denominator D,
  // R(x) = D v^n p(x/v) is integral, and p(y + s) = R(v y + u) / (D v^n).
  const std::size_t n = p.degree();
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const Integer u = shift.get_num();
  const Integer v = shift.get_den();
  std::vector<Integer> c(n + 1);
  Integer vp = 1;  // v^{n-k}
  for (std::size_t k = n + 1; k-- > 0;) {
    c[k] = p.coeffs()[k].get_num() * (den / p.coeffs()[k].get_den()) * vp;
    vp *= v;
  }
  // R(x + u), Horner-style.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n; j-- > i;) c[j] += u * c[j + 1];
  // R(v y) / (D v^n): coefficient k becomes c_k v^k / (D v^n) = c_k / (D v^{n-k}).
  std::vector<Rational> out(n + 1);
  Integer scale = den;
  for (std::size_t k = n + 1; k-- > 0;) {
    out[k] = Rational(c[k], scale);
    out[k].canonicalize();
    scale *= v;
  }
  return QPoly(std::move(out));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> to_strings(const QPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

std::vector<std::string> to_strings(const FPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (double c : p.coeffs()) out.push_back(format_double(c));
  return out;
}

QPoly qpoly_from_strings(std::span<const std::string> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return QPoly(std::move(c));
}

}  // namespace dsop
