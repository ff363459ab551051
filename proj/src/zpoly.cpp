#include "zpoly.hpp"

#include <cstdint>

namespace dsop::detail {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
  trim(p);
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly primitive_part(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    out.push_back(std::move(v));
  }
  make_primitive(out);
  return out;
}

ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  if (a.size() < b.size()) return a;
  std::size_t remaining = a.size() - b.size() + 1;
  while (!a.empty() && a.size() - 1 >= db) {
    --remaining;
    const std::size_t shift = a.size() - 1 - db;
    const Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  // Cancellation may drop several degrees at once; pad to the exact power.
  for (; remaining > 0; --remaining)
    for (auto& c : a) c *= lb;
  return a;
}

ZPoly derivative(const ZPoly& p) {
  ZPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

int sign_at(const ZPoly& p, const Rational& x) {
  // Homogenized Horner: den^deg * p(num/den) is an integer with the same sign.
  if (p.empty()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = p.back();
  Integer den_pow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + p[i] * den_pow;
  }
  return sgn(acc);
}

int sign_at_infinity(const ZPoly& p, int direction) {
  if (p.empty()) return 0;
  const int s = sgn(p.back());
  const bool odd = (p.size() - 1) % 2 == 1;
  return (direction < 0 && odd) ? -s : s;
}

QPoly to_qpoly(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return QPoly(std::move(c));
}

}  // namespace dsop::detail

namespace dsop::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}

std::vector<u64> reduce(const ZPoly& p, u64 m) {
  std::vector<u64> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = mpz_fdiv_ui(p[i].get_mpz_t(), m);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Degree of gcd over GF(m), m prime.
std::size_t gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 m) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const u64 inv = powmod(b.back(), m - 2, m);
    while (a.size() >= b.size()) {
      const u64 f = mulmod(a.back(), inv, m);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        const u64 t = mulmod(f, b[i], m);
        a[i + shift] = a[i + shift] >= t ? a[i + shift] - t : a[i + shift] + m - t;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace

bool coprime_modular(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return false;
  // Primes just below 2^62.
  for (u64 m : {4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL}) {
    const auto ra = reduce(a, m);
    const auto rb = reduce(b, m);
    if (ra.size() != a.size() || rb.size() != b.size()) continue;
    if (gcd_degree_mod(ra, rb, m) == 0) return true;
  }
  return false;
}

}  // namespace dsop::detail
