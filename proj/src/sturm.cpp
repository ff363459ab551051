#include "dsop/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

#include "dsop/roots.hpp"
#include "zpoly.hpp"

namespace dsop {
namespace {

using detail::ZPoly;

/// Sturm chain of a squarefree integer polynomial, every member primitive.
class SturmChain {
 public:
  explicit SturmChain(const QPoly& squarefree) {
    chain_.push_back(detail::primitive_part(squarefree));
    if (chain_[0].size() <= 1) return;
    ZPoly d = detail::derivative(chain_[0]);
    detail::make_primitive(d);
    chain_.push_back(std::move(d));
    while (chain_.back().size() > 1) {
      const ZPoly& a = chain_[chain_.size() - 2];
      const ZPoly& b = chain_.back();
      ZPoly r = detail::pseudo_remainder(a, b);
      if (r.empty()) break;
      // prem = lc(b)^k * rem; the chain needs -rem up to a positive factor.
      const std::size_t k = a.size() - b.size() + 1;
      const bool flip = !(sgn(b.back()) < 0 && k % 2 == 1);
      if (flip)
        for (auto& c : r) c = -c;
      detail::make_primitive(r);
      chain_.push_back(std::move(r));
    }
  }

  const ZPoly& head() const { return chain_.front(); }

  std::size_t variations_at(const Rational& x) const {
    return count([&](const ZPoly& p) { return detail::sign_at(p, x); });
  }

  std::size_t variations_at_infinity(int direction) const {
    return count([&](const ZPoly& p) { return detail::sign_at_infinity(p, direction); });
  }

  std::size_t variations_at(const ExtReal& x) const {
    switch (x.kind()) {
      case ExtReal::Kind::minus_infinity: return variations_at_infinity(-1);
      case ExtReal::Kind::plus_infinity: return variations_at_infinity(+1);
      case ExtReal::Kind::finite: break;
    }
    return variations_at(x.value());
  }

 private:
  template <class SignFn>
  std::size_t count(SignFn sign_of) const {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const int s = sign_of(p);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  std::vector<ZPoly> chain_;
};

// Below this degree the Sturm chain is cheap enough on its own.
constexpr std::size_t kBoundsDegree = 40;

std::size_t sign_variations(const ZPoly& p) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Descartes bound for roots in the open interval, after mapping it onto
// (0, ∞). Not used for the whole real line.
std::optional<std::size_t> descartes_bound(const QPoly& f, const ExtInterval& interval) {
  const ExtReal& lo = interval.lo();
  const ExtReal& hi = interval.hi();
  if (lo.is_finite() && !hi.is_finite()) return sign_variations(detail::primitive_part(taylor_shift(f, lo.value())));
  if (!lo.is_finite() && hi.is_finite()) {
    // f(hi - x)
    QPoly g = taylor_shift(f, hi.value());
    std::vector<Rational> c(g.coeffs().begin(), g.coeffs().end());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return sign_variations(detail::primitive_part(QPoly(std::move(c))));
  }
  if (lo.is_finite() && hi.is_finite()) {
    // h(t) = f(lo + (hi - lo) t) on (0, 1), then (x+1)^n h(1/(x+1)).
    QPoly h = taylor_shift(f, lo.value());
    std::vector<Rational> c(h.coeffs().begin(), h.coeffs().end());
    Rational scale = 1;
    for (auto& v : c) {
      v *= scale;
      scale *= hi.value() - lo.value();
    }
    std::reverse(c.begin(), c.end());
    return sign_variations(detail::primitive_part(taylor_shift(QPoly(std::move(c)), Rational(1))));
  }
  return std::nullopt;
}

// Certified shortcut for high degree: exact signs at rational points
// separating the floating roots give a lower bound, Descartes an upper
// bound. Equal bounds settle the count of roots in the open interval.
std::optional<std::size_t> interior_count_by_bounds(const QPoly& f, const ZPoly& zf, const ExtInterval& interval) {
  const auto upper = descartes_bound(f, interval);
  if (!upper) return std::nullopt;
  if (*upper == 0) return 0;
  std::vector<std::complex<double>> roots;
  try {
    roots = all_roots_float(f);
  } catch (const Error&) {
    return std::nullopt;
  }
  std::vector<Rational> inside;
  for (const auto& z : roots) {
    if (!std::isfinite(z.real())) continue;
    const Rational r(z.real());
    if (interval.interior_contains(r)) inside.push_back(r);
  }
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  if (inside.empty()) return std::nullopt;

  std::vector<Rational> samples;
  const ExtReal& lo = interval.lo();
  const ExtReal& hi = interval.hi();
  samples.push_back(lo.is_finite() ? Rational((lo.value() + inside.front()) / 2)
                                   : Rational(inside.front() - 1 - abs(inside.front())));
  for (std::size_t i = 0; i + 1 < inside.size(); ++i) samples.push_back((inside[i] + inside[i + 1]) / 2);
  samples.push_back(hi.is_finite() ? Rational((hi.value() + inside.back()) / 2)
                                   : Rational(inside.back() + 1 + abs(inside.back())));
  std::size_t lower = 0;
  int last = 0;
  for (const auto& x : samples) {
    const int s = detail::sign_at(zf, x);
    if (s == 0) return std::nullopt;
    if (last != 0 && s != last) ++lower;
    last = s;
  }
  if (lower == *upper) return lower;
  return std::nullopt;
}

/// Distinct roots of a squarefree polynomial in the interval.
std::size_t count_squarefree(const QPoly& f, const ExtInterval& interval, Endpoints endpoints) {
  if (interval.is_empty() || f.degree() == 0) return 0;
  const ZPoly zf = detail::primitive_part(f);
  auto root_at = [&](const ExtReal& x) { return x.is_finite() && detail::sign_at(zf, x.value()) == 0; };
  if (interval.is_singleton()) {
    if (endpoints == Endpoints::open) return 0;
    return root_at(interval.lo()) ? 1 : 0;
  }
  std::optional<std::size_t> interior;
  if (f.degree() > kBoundsDegree) interior = interior_count_by_bounds(f, zf, interval);
  if (!interior) {
    const SturmChain sc(f);
    // V(lo) - V(hi) counts roots in (lo, hi].
    interior = sc.variations_at(interval.lo()) - sc.variations_at(interval.hi()) - (root_at(interval.hi()) ? 1 : 0);
  }
  std::size_t n = *interior;
  if (endpoints == Endpoints::closed) n += (root_at(interval.lo()) ? 1 : 0) + (root_at(interval.hi()) ? 1 : 0);
  return n;
}

void require_nonzero(const QPoly& p) {
  if (p.is_zero()) throw PreconditionError("root counting on the zero polynomial");
}

}  // namespace

std::size_t sturm_count(const QPoly& p, const ExtInterval& interval, Endpoints endpoints) {
  require_nonzero(p);
  if (p.degree() == 0) return 0;
  // The squarefree part is p / gcd(p, p').
  const QPoly g = gcd(p, p.derivative());
  return count_squarefree(divmod(p, g).first, interval, endpoints);
}

std::size_t sign_change_count(const QPoly& p, const ExtInterval& interval) {
  require_nonzero(p);
  const auto factors = squarefree_decomposition(p);
  std::size_t n = 0;
  for (std::size_t i = 0; i < factors.size(); i += 2) n += count_squarefree(factors[i], interval, Endpoints::open);
  return n;
}

std::size_t zeros_total_count(const QPoly& p, const ExtInterval& interval, Endpoints endpoints) {
  require_nonzero(p);
  const auto factors = squarefree_decomposition(p);
  std::size_t n = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) n += (i + 1) * count_squarefree(factors[i], interval, endpoints);
  return n;
}

}  // namespace dsop
