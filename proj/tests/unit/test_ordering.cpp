#include <doctest.h>

#include <algorithm>
#include <set>

#include "common.hpp"
#include "dsop/errors.hpp"
#include "dsop/ordering.hpp"
#include "dsop/sturm.hpp"

using namespace dsop;
using namespace dsop::test;

namespace {

const ExtReal kInf = ExtReal::plus_infinity();

VanishSpec random_vanish(Rng& rng, std::size_t max_m, std::size_t max_order) {
  for (;;) {
    const auto m = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_m)));
    std::vector<VanishPair> pairs;
    std::set<std::pair<std::size_t, Rational>> seen;
    while (pairs.size() < m) {
      VanishPair p{rng.rational(-20, 20, 3), static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_order)))};
      if (seen.insert({p.nu, p.r}).second) pairs.push_back(p);
    }
    VanishSpec v(std::move(pairs));
    if (v.is_sequentially_ordered()) return v;
  }
}

}  // namespace

TEST_CASE("delta_system") {
  auto d = delta_system(four_mass_spec()).intervals;
  REQUIRE(d.size() == 4);
  CHECK(d[0] == ExtInterval::closed(q("-1"), kInf));
  CHECK(d[1] == ExtInterval::closed(q("-9"), q("-3")));
  CHECK(d[2].is_empty());
  CHECK(d[3] == ExtInterval::point(q("-10")));

  d = delta_system(unordered_spec()).intervals;
  REQUIRE(d.size() == 3);
  CHECK(d[0] == ExtInterval::closed(q("0"), kInf));
  CHECK(d[1] == ExtInterval::point(q("-15")));
  CHECK(d[2] == ExtInterval::point(q("-9")));

  d = delta_system(SobolevSpec(LaguerreParam::exact(0), {})).intervals;
  REQUIRE(d.size() == 1);
  CHECK(d[0] == ExtInterval::closed(q("0"), kInf));
}

TEST_CASE("is_sequentially_ordered") {
  CHECK(is_sequentially_ordered(four_mass_spec()).ordered);
  const auto bad = is_sequentially_ordered(unordered_spec());
  CHECK_FALSE(bad.ordered);
  REQUIRE(bad.violating_k.has_value());
  CHECK(*bad.violating_k == 2);
  CHECK(bad.describe() == "k=2: {-9} ⊂ int([-15, ∞))");
  CHECK(is_sequentially_ordered(SobolevSpec(LaguerreParam::exact(0), {{q("-7"), 0, q("3")}})).ordered);
  CHECK(is_sequentially_ordered(derivative_mass_spec()).describe() == "sequentially ordered");
}

TEST_CASE("ordering invariant under permutation and zero weights") {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const auto spec = random_laguerre_spec(rng, 0, 3, 3, false);
    auto masses = spec.masses();
    const bool expected = is_sequentially_ordered(spec).ordered;
    std::shuffle(masses.begin(), masses.end(), rng.gen);
    masses.push_back({q("-11"), 1, q("0")});
    CHECK(is_sequentially_ordered(SobolevSpec(LaguerreParam::exact(0), masses)).ordered == expected);
  }
}

TEST_CASE("minimal_vanishing_poly and predicted_degree") {
  const VanishSpec counter({{q("-1"), 0}, {q("1"), 0}, {q("0"), 1}});
  CHECK(minimal_vanishing_poly(counter) == qp({"-1", "0", "1"}));
  CHECK(predicted_degree(counter) == 3);
  CHECK_FALSE(counter.is_sequentially_ordered());

  const VanishSpec single({{q("5/2"), 0}});
  CHECK(minimal_vanishing_poly(single) == qp({"-5/2", "1"}));
  CHECK(predicted_degree(single) == 1);

  const VanishSpec deriv({{q("5/2"), 3}});
  CHECK(minimal_vanishing_poly(deriv) == qp({"1"}));
  CHECK(predicted_degree(deriv) == 0);

  CHECK_THROWS_AS(VanishSpec({}), ValidationError);
  CHECK_THROWS_AS(VanishSpec({{q("1"), 0}, {q("1"), 0}}), ValidationError);
}

TEST_CASE("vanish spec ordering keeps (nu, r)") {
  const VanishSpec v({{q("3"), 1}, {q("-2"), 0}, {q("1"), 1}, {q("5"), 0}});
  const std::vector<VanishPair> expected{{q("-2"), 0}, {q("5"), 0}, {q("1"), 1}, {q("3"), 1}};
  CHECK(v.pairs() == expected);
  const auto hulls = v.order_hulls();
  REQUIRE(hulls.size() == 2);
  CHECK(hulls[0] == ExtInterval::closed(q("-2"), q("5")));
  CHECK(hulls[1] == ExtInterval::closed(q("1"), q("3")));
  CHECK_FALSE(v.is_sequentially_ordered());
}

TEST_CASE("degree law on random ordered specs") {
  Rng rng(32);
  for (int t = 0; t < 120; ++t) {
    const VanishSpec v = random_vanish(rng, 6, 4);
    const QPoly u = minimal_vanishing_poly(v);
    CHECK(u.degree() == predicted_degree(v));
    CHECK(u.leading() == 1);
    for (const auto& p : v.pairs()) CHECK(u.derivative(p.nu)(p.r) == 0);
    // the degree depends only on the multiset of orders
    auto shuffled = v.pairs();
    std::shuffle(shuffled.begin(), shuffled.end(), rng.gen);
    CHECK(predicted_degree(VanishSpec(shuffled)) == predicted_degree(v));
  }
}

TEST_CASE("rolle_bound_check examples") {
  const std::vector<ExtInterval> one{ExtInterval::closed(q("-2"), q("2"))};
  auto r = rolle_bound_check(qp({"-1", "0", "1"}), one, ExtInterval::empty());
  CHECK(r.lhs == 2);
  CHECK(r.degree == 2);
  CHECK(r.pass);

  const QPoly u = minimal_vanishing_poly(VanishSpec({{q("-1"), 0}, {q("1"), 0}}));
  const std::vector<ExtInterval> two{ExtInterval::closed(q("-1"), q("1")), ExtInterval::point(q("5"))};
  r = rolle_bound_check(u, two, ExtInterval::empty());
  CHECK(r.lhs == 2);
  CHECK(r.pass);

  const std::vector<ExtInterval> unordered{ExtInterval::closed(q("-1"), q("1")), ExtInterval::point(q("0"))};
  CHECK_THROWS_WITH_AS(rolle_bound_check(u, unordered, ExtInterval::empty()), doctest::Contains("ordered"),
                       PreconditionError);
  CHECK_THROWS_AS(rolle_bound_check(u, one, ExtInterval::closed(q("-2"), q("0"))), PreconditionError);
  const std::vector<ExtInterval> deep{ExtInterval::closed(q("-1"), q("1")), ExtInterval::empty(), ExtInterval::empty(),
                                      ExtInterval::point(q("4"))};
  CHECK_THROWS_AS(rolle_bound_check(u, deep, ExtInterval::empty()), PreconditionError);
}

TEST_CASE("rolle inequality on random instances") {
  Rng rng(33);
  int checked = 0;
  while (checked < 200) {
    const auto m = static_cast<std::size_t>(rng.integer(0, 3));
    const QPoly p = rng.poly(static_cast<std::size_t>(rng.integer(static_cast<long>(m), 8)));
    if (p.degree() < m) continue;
    std::vector<ExtInterval> iv;
    const Rational a = rng.rational(-3, 0), b = rng.rational(1, 4);
    iv.push_back(ExtInterval::closed(a, b));
    // later intervals sit outside the running hull, on either side
    Rational lo = a, hi = b;
    for (std::size_t k = 1; k <= m; ++k) {
      const long pick = rng.integer(0, 2);
      if (pick == 0) {
        iv.push_back(ExtInterval::empty());
      } else if (pick == 1) {
        const Rational x = lo - rng.positive(3);
        const Rational y = rng.integer(0, 1) ? x : Rational(x - rng.positive(2));
        iv.push_back(ExtInterval::closed(y, x));
        lo = y;
      } else {
        const Rational x = hi + rng.positive(3);
        iv.push_back(ExtInterval::closed(x, x));
        hi = x;
      }
    }
    ExtInterval j;
    if (rng.integer(0, 1)) {
      const Rational mid = (a + b) / 2, w = (b - a) / 4;
      j = ExtInterval::closed(Rational(mid - w), Rational(mid + w));
    }
    const auto r = rolle_bound_check(p, iv, j);
    CHECK(r.lhs <= r.degree);
    CHECK(r.lhs <= r.general_rhs);
    CHECK(r.general_rhs <= r.degree);
    CHECK(r.pass);
    ++checked;
  }
}
