#include <doctest.h>

#include <cmath>

#include "common.hpp"
#include "dsop/asymptotics.hpp"
#include "dsop/errors.hpp"
#include "dsop/report.hpp"

using namespace dsop;
using namespace dsop::test;

namespace {

const std::vector<std::size_t> kLadder{16, 64, 256};

std::vector<Rational> mass_points(const SobolevSpec& spec) {
  std::vector<Rational> cs;
  for (const auto& m : spec.masses()) cs.push_back(m.c);
  return cs;
}

}  // namespace

TEST_CASE("limit_product") {
  const std::vector<Rational> one{q("-1")};
  CHECK(std::abs(limit_product({-1.0, 0.0}, one)) < 1e-15);
  CHECK(limit_product({-3.0, 0.0}, {}) == std::complex<double>(1.0, 0.0));
  CHECK(std::abs(limit_product({-4.0, 0.0}, one) - 1.0 / 3.0) < 1e-15);
  CHECK_THROWS_AS(limit_product({1.0, 0.0}, one), PreconditionError);
  const std::vector<Rational> positive{q("2")};
  CHECK_THROWS_AS(limit_product({-1.0, 0.0}, positive), PreconditionError);

  Rng rng(51);
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> cs;
    for (long k = rng.integer(1, 4); k > 0; --k) cs.push_back(rng.rational(-10, -1, 3));
    const double x = -to_double(rng.positive(20, 5));
    const bool at_mass = std::any_of(cs.begin(), cs.end(), [&](const Rational& c) { return to_double(c) == x; });
    const double m = std::abs(limit_product({x, 0.0}, cs));
    CHECK(m < 1.0);
    CHECK((m == 0.0) == at_mass);
  }
}

TEST_CASE("ratio_trajectory") {
  const auto spec = single_point_spec();
  const auto r = ratio_trajectory(spec, q("-4"), kLadder);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.errors_strictly_decreasing());
  for (const auto& row : r.rows) CHECK(row.limit == r.rows[0].limit);
  CHECK(std::abs(r.rows[0].limit - 1.0 / 3.0) < 1e-15);
  CHECK(r.rows.back().abs_error < 0.1 * std::abs(r.rows.back().limit - 1.0) + 0.05);
  CHECK(r.exponent >= -1.0);
  CHECK(r.exponent <= -0.25);
  const auto serial = ratio_trajectory(spec, q("-4"), kLadder, Exec::serial);
  for (std::size_t i = 0; i < 3; ++i) CHECK(serial.rows[i].ratio == r.rows[i].ratio);

  const std::vector<std::size_t> small{1, 5, 20};
  const auto plain = ratio_trajectory(SobolevSpec(LaguerreParam::exact(1), {}), q("-3/2"), small);
  for (const auto& row : plain.rows) CHECK(row.ratio == std::complex<double>(1.0, 0.0));

  CHECK_THROWS_AS(ratio_trajectory(spec, q("1"), kLadder), PreconditionError);
  const SobolevSpec stacked(LaguerreParam::exact(0), {{q("-1"), 0, q("1")}, {q("-1"), 1, q("1")}});
  CHECK_THROWS_AS(ratio_trajectory(stacked, q("-4"), small), PreconditionError);
}

TEST_CASE("decay fit") {
  std::vector<RatioRow> rows;
  for (std::size_t n : {10, 100, 1000}) rows.push_back({n, {}, {}, 3.0 / std::sqrt(double(n))});
  CHECK(fit_decay_exponent(rows) == doctest::Approx(-0.5));
}

TEST_CASE("pj_limit") {
  const std::vector<Rational> one{q("-1")};
  const auto p = pj_limit({-4.0, 0.0}, one);
  REQUIRE(p.size() == 1);
  CHECK(std::abs(p[0] + 2.0 / 3.0) < 1e-15);
  const std::vector<Rational> clash{q("-2"), q("-2")};
  CHECK_THROWS_AS(pj_limit({-4.0, 0.0}, clash), PreconditionError);

  Rng rng(52);
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> cs;
    while (cs.size() < static_cast<std::size_t>(rng.integer(1, 4))) {
      const Rational c = rng.rational(-10, -1, 3);
      if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
    }
    const std::complex<double> x(-to_double(rng.positive(20, 3)), to_double(rng.rational(-3, 3)));
    std::complex<double> sum = 1.0;
    for (const auto& v : pj_limit(x, cs)) sum += v;
    CHECK(std::abs(sum - limit_product(x, cs)) < 1e-12);
  }
}

TEST_CASE("pj_finite_n") {
  Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    // distinct points, one order each
    const auto spec = random_laguerre_spec(rng, 3, 3, 2, false);
    const auto n = static_cast<std::size_t>(rng.integer(static_cast<long>(spec.max_order()) + 1, 20));
    const Rational x = -rng.positive(12, 4);
    const auto p = pj_finite_n(x, spec, n);
    CHECK(p.system_residual_zero);
    Rational sum = 1;
    for (const auto& v : p.exact) sum += v;
    CHECK(sum == p.ratio);
    const QPoly s = sobolev_poly_exact(n, spec);
    CHECK(p.ratio == s(x) / monic_laguerre<Rational>(n, LaguerreParam::exact(spec.exact_alpha()))(x));
  }

  const auto spec = four_mass_spec();
  CHECK_THROWS_AS(pj_finite_n(q("-4"), four_mass_spec(), 3), PreconditionError);
  const SobolevSpec two(LaguerreParam::exact(0), {{q("-1"), 0, q("1")}, {q("-4"), 1, q("2")}});
  const auto limit = pj_limit({-2.0, 0.0}, mass_points(two));
  std::vector<double> errors;
  for (std::size_t n : kLadder) {
    const auto p = pj_finite_n(q("-2"), two, n);
    double e = 0.0;
    for (std::size_t j = 0; j < 2; ++j) e = std::max(e, std::abs(p.values[j] - limit[j]));
    errors.push_back(e);
  }
  CHECK(errors[1] < errors[0]);
  CHECK(errors[2] < errors[1]);
}

TEST_CASE("corollary41_check") {
  const auto spec = single_point_spec();
  const auto base = ratio_trajectory(spec, q("-4"), kLadder);
  const auto r00 = corollary41_check(spec, 0, 0, 1, q("-4"), kLadder);
  for (std::size_t i = 0; i < 3; ++i) CHECK(r00.with_laguerre.rows[i].ratio == base.rows[i].ratio);
  CHECK(r00.derivative.errors_strictly_decreasing());
  CHECK(std::abs(r00.derivative.rows[0].limit - 1.0 / 3.0) < 1e-15);

  const auto r11 = corollary41_check(spec, 1, 1, 0, q("-4"), kLadder);
  CHECK(std::abs(r11.with_laguerre.rows[0].limit + 0.5 / 3.0) < 1e-15);
  CHECK(std::abs(r11.with_sobolev.rows[0].limit + 0.5) < 1e-15);

  const SobolevSpec plain(LaguerreParam::exact(0), {});
  const auto empty = corollary41_check(plain, 1, 1, 0, q("-4"), kLadder);
  for (std::size_t i = 0; i < 3; ++i) CHECK(empty.with_sobolev.rows[i].ratio == empty.with_laguerre.rows[i].ratio);

  CHECK_THROWS_AS(corollary41_check(spec, -1, 0, 0, q("-4"), kLadder), PreconditionError);
  CHECK_THROWS_AS(corollary41_check(spec, 0, 0, 4, q("-4"), kLadder), PreconditionError);
  const std::vector<std::size_t> tiny{3, 8};
  CHECK_THROWS_AS(corollary41_check(spec, 0, -4, 0, q("-4"), tiny), PreconditionError);
}

TEST_CASE("kernel asymptotic normalization") {
  const Rational x = q("-1"), y = q("-4");
  for (std::size_t i = 0; i <= 1; ++i)
    for (std::size_t j = 0; j <= 1; ++j) {
      double previous = INFINITY;
      for (std::size_t n : kLadder) {
        const Rational ratio = kernel_eval(n - 1, i, j, x, y, 0).value /
                               (classical_laguerre_value(n, long(i), x) * classical_laguerre_value(n, long(j), y));
        const double v = to_double(ratio) * std::pow(double(n), -0.5) * 3.0;
        const double e = std::fabs(v - ((i + j) % 2 ? -1.0 : 1.0));
        CHECK(e < previous);
        previous = e;
      }
    }
}

TEST_CASE("partial fractions") {
  const std::vector<Rational> one{q("1")};
  const auto a = partial_fraction_coefficients(one);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == -2);
  CHECK(partial_fraction_check(one));
  CHECK(partial_fraction_check({}));
  Rng rng(54);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> ts;
    while (ts.size() < 4) {
      const Rational v = rng.positive(9, 6);
      if (std::find(ts.begin(), ts.end(), v) == ts.end()) ts.push_back(v);
    }
    CHECK(partial_fraction_check(ts));
  }
  const std::vector<Rational> repeated{q("1"), q("1")};
  CHECK_THROWS_AS(partial_fraction_check(repeated), PreconditionError);
  const std::vector<Rational> negative{q("-1")};
  CHECK_THROWS_AS(partial_fraction_check(negative), PreconditionError);
}

TEST_CASE("ratio csv round trip") {
  const auto r = ratio_trajectory(single_point_spec(), q("-4"), kLadder);
  const std::string csv = to_csv(r);
  CHECK(csv.rfind("n,ratio_re,ratio_im,limit_re,limit_im,abs_error\n", 0) == 0);
  const auto rows = parse_ratio_csv(csv);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rows[i].n == r.rows[i].n);
    CHECK(rows[i].abs_error == r.rows[i].abs_error);
  }
  CHECK_THROWS_AS(parse_ratio_csv("n,x\n1,2\n"), ValidationError);
}
