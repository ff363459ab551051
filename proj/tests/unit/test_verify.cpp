#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "common.hpp"
#include "dsop/errors.hpp"
#include "dsop/verify.hpp"

using namespace dsop;
using namespace dsop::test;

TEST_CASE("theorem1_check examples") {
  auto r = theorem1_check(5, four_mass_spec());
  CHECK(r.sign_changes == 1);
  CHECK(r.bound == 1);
  CHECK(r.pass);
  CHECK(r.status == BoundStatus::pass);
  CHECK(summary_line(r) == "n=5 changes=1 bound=1 PASS");

  r = theorem1_check(2, derivative_mass_spec());
  CHECK(r.d_star == 1);
  CHECK(r.sign_changes == 1);
  CHECK(r.pass);
}

TEST_CASE("outside the hypothesis") {
  CHECK_THROWS_AS(theorem1_check(5, unordered_spec()), HypothesisError);
  const auto r = theorem1_evaluate(5, unordered_spec());
  CHECK(r.status == BoundStatus::not_applicable);
  CHECK(r.sign_changes == 2);
  CHECK(r.bound == 3);
  CHECK(to_string(r.status) == "N/A");
}

TEST_CASE("theorem1 sweep") {
  const auto serial = theorem1_sweep(12, four_mass_spec(), Exec::serial);
  const auto parallel = theorem1_sweep(12, four_mass_spec(), Exec::parallel);
  REQUIRE(serial.size() == 12);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].n == i + 1);
    CHECK(serial[i].sign_changes == parallel[i].sign_changes);
    CHECK(serial[i].status == BoundStatus::pass);
    CHECK(serial[i].pass == (serial[i].sign_changes >= serial[i].bound));
  }
}

TEST_CASE("randomized ordered specs satisfy the bound") {
  Rng rng(41);
  for (int t = 0; t < 25; ++t) {
    const auto spec = random_laguerre_spec(rng, 2, 3, 3, true);
    const auto n = static_cast<std::size_t>(rng.integer(1, 18));
    const auto r = theorem1_check(n, spec);
    CHECK(r.pass);
    CHECK(r.sign_changes + spec.d_star() >= n);
  }
}

TEST_CASE("attraction at small n") {
  const auto r = attraction_check(2, derivative_mass_spec(), 0.5);
  REQUIRE(r.roots.size() == 2);
  REQUIRE(r.per_mass_nearest.size() == 1);
  CHECK(r.per_mass_nearest[0].distance == doctest::Approx(std::sqrt(2.0) - 1.0));
  CHECK(r.within_radius == 1);
  CHECK(r.positive_real == 1);
}

TEST_CASE("attraction geometry stays bounded") {
  for (std::size_t n : {50, 100}) {
    const auto r = attraction_check(n, derivative_mass_spec(), 0.5);
    CHECK(r.roots.size() == n);
    CHECK(r.within_radius == 1);
    CHECK(r.positive_real == n - 1);
    CHECK(std::isfinite(r.max_distance_to_half_line));
    CHECK(r.min_separation > 1e-6);
    // the attracted root sits near -1; the others hug the half line
    CHECK(r.max_distance_to_half_line == doctest::Approx(std::abs(r.per_mass_nearest[0].root)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(attraction_check(5, unordered_spec(), 0.5), PreconditionError);
  const SobolevSpec stacked(LaguerreParam::exact(0), {{q("-1"), 0, q("1")}, {q("-1"), 1, q("1")}});
  CHECK_THROWS_AS(attraction_check(5, stacked, 0.5), PreconditionError);
}

TEST_CASE("report serialization") {
  const auto r = attraction_check(5, four_mass_spec(), 0.5);
  const auto doc = nlohmann::json::parse(to_json(r));
  CHECK(doc.at("n") == 5);
  CHECK(doc.at("sign_changes_in_hull") == 1);
  CHECK(doc.at("status") == "PASS");
  CHECK(doc.at("roots").size() == 5);
  const std::string header = csv_header();
  const std::string row = to_csv_row(r);
  CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
  CHECK(row.rfind("5,", 0) == 0);
}
