#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "dsop/errors.hpp"
#include "dsop/interval.hpp"
#include "dsop/roots.hpp"
#include "dsop/sturm.hpp"

using namespace dsop;
using namespace dsop::test;

namespace {

const ExtInterval kPositive = ExtInterval::closed(q("0"), ExtReal::plus_infinity());

QPoly from_roots(const std::vector<Rational>& roots) {
  QPoly p = QPoly::constant(q("1"));
  for (const auto& r : roots) p *= QPoly::linear_factor(r);
  return p;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(q("6/4") == Rational(3, 2));
  CHECK(to_string(q("-6/4")) == "-3/2");
  CHECK_THROWS_AS(q("6/-4"), ValidationError);
  CHECK(to_string(q("-10")) == "-10");
  CHECK(q("0/5") == 0);
  CHECK(q("-6/4").get_den() > 0);
  CHECK_THROWS_AS(q("1.5"), ValidationError);
  CHECK_THROWS_AS(q("1e3"), ValidationError);
  CHECK_THROWS_AS(q(" 1"), ValidationError);
  CHECK_THROWS_AS(q("1/0"), ValidationError);
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Rational r = rng.rational(-1000, 1000, 97);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("poly_eval") {
  const QPoly p = qp({"-2", "0", "1"});
  CHECK(p(q("0")) == -2);
  CHECK(std::fabs(to_float(p)(std::sqrt(2.0))) < 1e-12);
  CHECK(QPoly::monomial(5)(q("2")) == 32);
  CHECK(p(q("1/3")) == q("-17/9"));
}

TEST_CASE("poly_derivative") {
  const QPoly p = qp({"-2", "0", "1"});
  CHECK(p.derivative(1) == qp({"0", "2"}));
  CHECK(p.derivative(3).is_zero());
  const QPoly r = qp({"0", "2", "0", "0", "0", "1"});
  CHECK(r.derivative(0) == r);
}

TEST_CASE("poly_arith") {
  CHECK(qp({"-1", "1"}) * qp({"1", "1"}) == qp({"-1", "0", "1"}));
  const QPoly p = qp({"-2", "0", "1"});
  const QPoly zero = p - p;
  CHECK(zero.is_zero());
  CHECK(zero.size() == 0);
  CHECK_THROWS_AS((void)zero.degree(), PreconditionError);
  CHECK(p.scaled(q("3")) == qp({"-6", "0", "3"}));
}

TEST_CASE("sturm_count") {
  CHECK(sturm_count(qp({"-2", "0", "1"}), kPositive, Endpoints::open) == 1);
  CHECK(sturm_count(qp({"-1", "0", "1"}), ExtInterval::closed(q("-2"), q("0"))) == 1);
  CHECK(sturm_count(from_roots({q("1"), q("1")}), ExtInterval::closed(q("0"), q("2"))) == 1);
  // endpoint roots: closed counts them, open subtracts them
  const QPoly p = from_roots({q("0"), q("1"), q("2")});
  CHECK(sturm_count(p, ExtInterval::closed(q("0"), q("2"))) == 3);
  CHECK(sturm_count(p, ExtInterval::closed(q("0"), q("2")), Endpoints::open) == 1);
  CHECK_THROWS_AS(sturm_count(QPoly(), kPositive), PreconditionError);
}

TEST_CASE("sign_change_count") {
  CHECK(sign_change_count(from_roots({q("1"), q("1"), q("2")}), kPositive) == 1);
  CHECK(sign_change_count(four_mass_s5(), kPositive) == 1);
  CHECK(sign_change_count(unordered_s5(), kPositive) == 2);
  CHECK_THROWS_AS(sign_change_count(QPoly(), kPositive), PreconditionError);
}

TEST_CASE("zeros_total_count") {
  CHECK(zeros_total_count(from_roots({q("1"), q("1"), q("2")}), ExtInterval::closed(q("0"), q("3"))) == 3);
  CHECK(zeros_total_count(qp({"1", "0", "1"}), ExtInterval::real_line()) == 0);
  CHECK(zeros_total_count(qp({"-1", "0", "1"}), ExtInterval::point(q("0"))) == 0);
  CHECK_THROWS_AS(zeros_total_count(QPoly(), kPositive), PreconditionError);
}

TEST_CASE("all_roots_float examples") {
  auto r = all_roots_float(qp({"-2", "0", "1"}));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - std::sqrt(2.0) * -1.0) < 1e-8);
  CHECK(std::abs(r[1] - std::sqrt(2.0)) < 1e-8);

  r = all_roots_float(unordered_s5());
  const std::vector<std::complex<double>> expected{{-19.77, 0}, {0.55, 0}, {3.36, 0}, {6.66, -3.02}, {6.66, 3.02}};
  REQUIRE(r.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::fabs(r[i].real() - expected[i].real()) < 2e-2);
    CHECK(std::fabs(r[i].imag() - expected[i].imag()) < 2e-2);
  }

  r = all_roots_float(QPoly::monomial(3));
  REQUIRE(r.size() == 3);
  for (const auto& z : r) CHECK(std::abs(z) < 1e-8);
}

TEST_CASE("all_roots_float residual and determinism") {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const QPoly p = rng.poly(static_cast<std::size_t>(rng.integer(1, 12)));
    const FPoly f = to_float(p);
    const auto a = all_roots_float(p, {.exec = Exec::serial});
    const auto b = all_roots_float(p, {.exec = Exec::parallel});
    CHECK(a == b);
    for (const auto& z : a) {
      double scale = 0.0;
      for (std::size_t k = 0; k < f.size(); ++k) scale += std::fabs(f.coeff(k)) * std::pow(std::abs(z), double(k));
      if (scale == 0.0) CHECK(z == 0.0);  // exact root at the origin
      else CHECK(std::abs(eval_complex(f, z)) / scale <= 1e-10);
    }
  }
}

TEST_CASE("leibniz rule for derivatives") {
  Rng rng(1);
  for (int t = 0; t < 40; ++t) {
    const QPoly p = rng.poly(static_cast<std::size_t>(rng.integer(0, 12)));
    const QPoly s = rng.poly(static_cast<std::size_t>(rng.integer(0, 12)));
    CHECK((p * s).derivative() == p.derivative() * s + p * s.derivative());
  }
}

TEST_CASE("sturm count matches float real roots") {
  Rng rng(2);
  for (int t = 0; t < 25; ++t) {
    // distinct integer roots at spacing >= 1, plus a few complex pairs
    std::vector<Rational> roots;
    for (long r = -12; r <= 12; ++r)
      if (rng.integer(0, 3) == 0) roots.push_back(Rational(r));
    if (roots.size() > 8) roots.resize(8);
    QPoly p = from_roots(roots);
    const long pairs = rng.integer(0, 1);
    for (long k = 0; k < pairs; ++k) p *= qp({std::to_string(rng.integer(1, 9)), "0", "1"});
    if (p.degree() == 0) p *= qp({"-1", "1"});
    std::size_t real = 0;
    std::vector<double> seen;
    for (const auto& z : all_roots_float(p)) {
      if (std::fabs(z.imag()) >= 1e-8) continue;
      if (std::none_of(seen.begin(), seen.end(), [&](double s) { return std::fabs(s - z.real()) < 1e-6; })) {
        seen.push_back(z.real());
        ++real;
      }
    }
    CHECK(sturm_count(p, ExtInterval::real_line()) == real);
  }
}

TEST_CASE("count ordering sign changes <= distinct <= total") {
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    std::vector<Rational> roots;
    const long k = rng.integer(1, 7);
    for (long i = 0; i < k; ++i) roots.push_back(Rational(rng.integer(-4, 4)));
    QPoly p = from_roots(roots);
    if (rng.integer(0, 1)) p *= qp({"1", "0", "1"});
    const Rational a = rng.rational(-5, 0), b = rng.rational(0, 5);
    const ExtInterval iv = ExtInterval::closed(a, b);
    const auto sc = sign_change_count(p, iv);
    const auto st = sturm_count(p, iv);
    const auto tot = zeros_total_count(p, iv);
    CHECK(sc <= st);
    CHECK(st <= tot);
  }
}

TEST_CASE("integer polynomial at a/b scaled by b^deg is an integer") {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> c(static_cast<std::size_t>(rng.integer(1, 10)));
    for (auto& v : c) v = Rational(rng.integer(-50, 50));
    c.back() = 1;
    const QPoly p(c);
    const Rational x = rng.rational(-9, 9, 13);
    const Rational v = p(x) * pow(Rational(x.get_den()), p.degree());
    CHECK(v.get_den() == 1);
  }
}

TEST_CASE("squarefree decomposition and gcd") {
  const QPoly p = from_roots({q("1"), q("1"), q("2"), q("3"), q("3"), q("3")}).scaled(q("5"));
  const auto f = squarefree_decomposition(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == qp({"-2", "1"}));
  CHECK(f[1] == qp({"-1", "1"}));
  CHECK(f[2] == qp({"-3", "1"}));
  CHECK(gcd(from_roots({q("1"), q("2")}), from_roots({q("2"), q("5")})) == qp({"-2", "1"}));
  CHECK(gcd(four_mass_s5(), four_mass_s5().derivative()) == qp({"1"}));
}

TEST_CASE("taylor shift") {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const QPoly p = rng.poly(static_cast<std::size_t>(rng.integer(0, 9)));
    const Rational s = rng.rational(-5, 5, 9);
    const QPoly shifted = taylor_shift(p, s);
    const Rational x = rng.rational(-5, 5, 9);
    CHECK(shifted(x) == p(Rational(x + s)));
  }
}

TEST_CASE("serialization round trip") {
  const QPoly p = four_mass_s5();
  const auto strings = to_strings(p);
  CHECK(strings.back() == "1");
  CHECK(qpoly_from_strings(strings) == p);
  CHECK(to_strings(QPoly()).empty());
}

TEST_CASE("intervals") {
  const auto ray = ExtInterval::closed(q("-15"), ExtReal::plus_infinity());
  CHECK(ray.to_string() == "[-15, ∞)");
  CHECK(ExtInterval::point(q("-9")).inside_interior_of(ray));
  CHECK_FALSE(ExtInterval::point(q("-15")).meets_interior_of(ray));
  CHECK(ExtInterval::point(q("2")).has_empty_interior());
  CHECK(ExtInterval::empty().inside_interior_of(ExtInterval::point(q("0"))));
  CHECK_THROWS_AS(ExtInterval::closed(q("1"), q("0")), PreconditionError);
  CHECK(ray.hull_with(ExtInterval::point(q("-20"))) == ExtInterval::closed(q("-20"), ExtReal::plus_infinity()));
}
