#pragma once

#include <random>
#include <string>
#include <vector>

#include "dsop/laguerre.hpp"
#include "dsop/poly.hpp"
#include "dsop/rational.hpp"
#include "dsop/sobolev.hpp"

namespace dsop::test {

inline Rational q(const std::string& s) { return parse_rational(s); }

inline QPoly qp(const std::vector<std::string>& ascending) {
  std::vector<Rational> c;
  for (const auto& s : ascending) c.push_back(q(s));
  return QPoly(std::move(c));
}

// {c = -1, order 1, lambda = 2}, alpha = 0
inline SobolevSpec derivative_mass_spec() {
  return SobolevSpec(LaguerreParam::exact(0), {{q("-1"), 1, q("2")}});
}

inline SobolevSpec four_mass_spec() {
  return SobolevSpec(LaguerreParam::exact(0), {{q("-1"), 0, q("10")},
                                               {q("-3"), 1, q("5")},
                                               {q("-9"), 1, q("5")},
                                               {q("-10"), 3, q("20")}});
}

inline SobolevSpec unordered_spec() {
  return SobolevSpec(LaguerreParam::exact(0), {{q("-15"), 1, q("1")}, {q("-9"), 2, q("1")}});
}

inline SobolevSpec single_point_spec() {
  return SobolevSpec(LaguerreParam::exact(0), {{q("-1"), 0, q("1")}});
}

inline QPoly four_mass_s5() {
  return qp({"-22386262325875230/16894750106161", "-36972053870326650/16894750106161",
             "-7830454972601355/16894750106161", "1836311881214045/16894750106161",
             "380961336355365/16894750106161", "1"});
}

inline QPoly unordered_s5() {
  return qp({"42523040550/21682477", "-98030649090/21682477", "40953207555/21682477", "-5053767275/21682477",
             "55079160/21682477", "1"});
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

  // p/q with q in [1, max_den], value in [lo, hi]
  Rational rational(long lo, long hi, long max_den = 7) {
    const long den = integer(1, max_den);
    Rational r(integer(lo * den, hi * den), den);
    r.canonicalize();
    return r;
  }

  // value in (0, hi]
  Rational positive(long hi, long max_den = 7) {
    const long den = integer(1, max_den);
    Rational r(integer(1, hi * den), den);
    r.canonicalize();
    return r;
  }

  QPoly poly(std::size_t deg, long bound = 9) {
    std::vector<Rational> c(deg + 1);
    for (auto& v : c) v = rational(-bound, bound, 4);
    if (c.back() == 0) c.back() = 1;
    return QPoly(std::move(c));
  }
};

// Random Laguerre spec with masses in [-10, -1], orders <= max_order.
// When ordered is set, resamples until the result is sequentially ordered.
SobolevSpec random_laguerre_spec(Rng& rng, long max_alpha, std::size_t max_points, std::size_t max_order,
                                 bool ordered);

}  // namespace dsop::test
