#include <doctest.h>

#include "gfix/core.hpp"
#include "gfix/gmetric.hpp"
#include "support/checks.hpp"
#include "support/instances.hpp"

using namespace gfix;
using namespace gfix::testsupport;

TEST_SUITE("core") {

TEST_CASE("labels must be unique and non-empty") {
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "a"}, std::vector<double>(4, 0.0)),
                  SchemaError);
  CHECK_THROWS_AS(FiniteMetricSpace({}, {}), SchemaError);
  CHECK_THROWS_AS(FiniteGSpace::unvalidated({"x", ""},
                                            std::vector<double>(8, 0.0),
                                            Provenance::RawTensor),
                  SchemaError);
}

TEST_CASE("tensor size and sign are checked at construction") {
  CHECK_THROWS_AS(FiniteGSpace::unvalidated({"x", "y"},
                                            std::vector<double>(7, 0.0),
                                            Provenance::RawTensor),
                  SchemaError);
  std::vector<double> negative(8, 0.0);
  negative[3] = -0.5;
  CHECK_THROWS_AS(FiniteGSpace::unvalidated({"x", "y"}, negative,
                                            Provenance::RawTensor),
                  SchemaError);
}

TEST_CASE("self map must be total and in range") {
  CHECK_THROWS_AS(SelfMap({0, 1}, 3), SchemaError);
  CHECK_THROWS_AS(SelfMap({0, 3, 1}, 3), SchemaError);
  SelfMap ok({2, 0, 1}, 3);
  CHECK(ok(0) == 2);
}

TEST_CASE("validate_space accepts the sum-form plane example") {
  const auto constructed = g_from_metric_sum(plane3_metric());
  auto raw = FiniteGSpace::unvalidated(constructed.labels(),
                                       constructed.table(),
                                       Provenance::RawTensor);
  CHECK_FALSE(raw.validated());
  const auto validated = validate_space(std::move(raw));
  CHECK(validated.validated());
  CHECK(near(validated(0, 1, 2), 0.5 + 1.0 + 1.0));
}

TEST_CASE("validate_space accepts the max-form line example") {
  const auto constructed = g_from_metric_max(line3_metric());
  auto raw = FiniteGSpace::unvalidated(constructed.labels(),
                                       constructed.table(),
                                       Provenance::RawTensor);
  const auto validated = validate_space(std::move(raw));
  CHECK(validated.validated());
  CHECK(near(validated(0, 1, 2), 1.0));
}

TEST_CASE("validate_space rejects a nonzero diagonal entry as P1") {
  // g(x,x,x) = 1 for the single point
  auto raw = FiniteGSpace::unvalidated({"x"}, {1.0}, Provenance::RawTensor);
  try {
    validate_space(std::move(raw));
    FAIL("expected an axiom violation");
  } catch (const AxiomViolationError& e) {
    CHECK(e.axiom == Axiom::P1);
    CHECK(e.witness == std::vector<int>{0, 0, 0});
  }
}

TEST_CASE("interval rendering") {
  CHECK(to_string(Interval{}) == "empty");
  CHECK(to_string(Interval{0.5, 1.0, false, false}) == "[0.5, 1)");
  CHECK(to_string(Interval{0.0, 0.25, true, false}) == "(0, 0.25)");
}

}  // TEST_SUITE
