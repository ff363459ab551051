#include <doctest.h>

#include <string>

#include "common.hpp"
#include "dsop/config.hpp"
#include "dsop/errors.hpp"
#include "dsop/ordering.hpp"

using namespace dsop;
using namespace dsop::test;

namespace {

const char* kFourMasses = R"({
  "measure": {"type": "laguerre", "alpha": "0"},
  "masses": [
    {"c": "-1", "order": 0, "lambda": "10"},
    {"c": "-3", "order": 1, "lambda": "5"},
    {"c": "-9", "order": 1, "lambda": "5"},
    {"c": "-10", "order": 3, "lambda": "20"}
  ],
  "mode": "exact"
})";

std::string with_mass(const std::string& mass) {
  return R"({"measure": {"type": "laguerre", "alpha": "0"}, "masses": [)" + mass + "]}";
}

}  // namespace

TEST_CASE("parse to spec") {
  const auto doc = parse_config(kFourMasses);
  CHECK(doc.mode == Mode::exact);
  CHECK(doc.masses.size() == 4);
  const auto spec = to_spec(doc);
  CHECK(spec.masses() == four_mass_spec().masses());
  CHECK(spec.exact_alpha() == 0);
}

TEST_CASE("round trip") {
  const std::vector<std::string> docs{
      kFourMasses,
      R"({"measure": {"type": "moments", "values": ["1", "1/2", "1/3"], "hull": ["0", "inf"]}, "masses": [], "mode": "float"})",
      R"({"measure": {"type": "moments", "values": ["2"], "hull": ["-inf", "-3/2"]}, "masses": [{"c": "5", "order": 2, "lambda": "0"}]})",
      with_mass(R"({"c": "-7/3", "order": 1, "lambda": "1/9"})"),
  };
  for (const auto& text : docs) {
    const auto doc = parse_config(text);
    const std::string once = serialize_config(doc);
    CHECK(parse_config(once) == doc);
    CHECK(serialize_config(parse_config(once)) == once);
  }
}

TEST_CASE("validation messages") {
  CHECK_THROWS_WITH_AS(to_spec(parse_config(with_mass(R"({"c": "-1", "order": 0, "lambda": "-1"})"))),
                       doctest::Contains("lambda must be nonnegative"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_config(with_mass(R"({"c": "-1", "order": 0, "lambda": "-1"})")),
                       doctest::Contains("lambda must be nonnegative"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_config("{\n  \"measure\": ,\n}"), doctest::Contains("line 2"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_config("{\n  \"measure\": ,\n}"), doctest::Contains("column"), ValidationError);
  CHECK_THROWS_AS(parse_config(with_mass(R"({"c": "-1", "order": 0, "lambda": "1", "weight": "2"})")), ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"measure": {"type": "laguerre", "alpha": "0"}, "extra": 1})"), ValidationError);
  CHECK_THROWS_AS(parse_config(with_mass(R"({"c": "-1.5", "order": 0, "lambda": "1"})")), ValidationError);
  CHECK_THROWS_AS(parse_config(with_mass(R"({"c": -1, "order": 0, "lambda": "1"})")), ValidationError);
  CHECK_THROWS_AS(parse_config(with_mass(R"({"c": "-1", "order": -1, "lambda": "1"})")), ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"measure": {"type": "jacobi"}})"), ValidationError);
  CHECK_THROWS_AS(to_spec(parse_config(with_mass(R"({"c": "1", "order": 0, "lambda": "1"})"))), ValidationError);
  CHECK_THROWS_AS(to_spec(parse_config(R"({"measure": {"type": "laguerre", "alpha": "1/2"}, "masses": []})")),
                  ValidationError);
  CHECK_NOTHROW(to_spec(parse_config(R"({"measure": {"type": "laguerre", "alpha": "1/2"}, "masses": [], "mode": "float"})")));
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ValidationError);
}

TEST_CASE("zero weights are dropped by to_spec") {
  const auto doc = parse_config(with_mass(R"({"c": "-1", "order": 0, "lambda": "0"}, {"c": "-2", "order": 1, "lambda": "3"})"));
  CHECK(doc.masses.size() == 2);
  const auto spec = to_spec(doc);
  REQUIRE(spec.d_star() == 1);
  CHECK(spec.masses()[0].c == -2);
  CHECK(is_sequentially_ordered(spec).ordered);
}

TEST_CASE("shipped configs load") {
  for (const char* name : {"derivative_mass_at_minus_one", "sequentially_ordered_four_masses", "not_sequentially_ordered",
                           "single_point_mass", "laguerre_no_masses", "moments_uniform_on_unit_interval"}) {
    CAPTURE(name);
    const std::string path = std::string(DSOP_CONFIG_DIR) + "/" + name + ".json";
    CHECK_NOTHROW(to_spec(load_config(path)));
  }
  CHECK(to_spec(load_config(std::string(DSOP_CONFIG_DIR) + "/not_sequentially_ordered.json")).masses() ==
        unordered_spec().masses());
}
