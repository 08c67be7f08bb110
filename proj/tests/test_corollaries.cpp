#include <doctest.h>

#include "gfix/corollaries.hpp"
#include "gfix/solver.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"
#include "support/instances.hpp"

using namespace gfix;
using namespace gfix::testsupport;

TEST_SUITE("corollaries") {

TEST_CASE("perimeter contraction on the plane example") {
  const auto m = plane3_metric();
  const auto report = check_perimeter_contraction(m, plane3_t1());
  REQUIRE(report.tight_constant.has_value());
  // image perimeter 2 ||A-B|| = 1 against preimage perimeter 5/2
  CHECK(near(*report.tight_constant, 0.4));
  CHECK(report.holds);
  CHECK(near(report.witness_lhs, 1.0));
  CHECK(near(report.witness_rhs, 2.5));
}

TEST_CASE("max contraction tight constants") {
  CHECK(near(*check_max_banach(plane3_metric(), plane3_t1()).tight_constant,
             0.5));
  CHECK(near(*check_max_banach(line3_metric(), line3_t1()).tight_constant,
             0.2));
}

TEST_CASE("degenerate maps") {
  const auto m = plane3_metric();
  const SelfMap constant({0, 0, 0}, 3);
  CHECK(*check_perimeter_contraction(m, constant).tight_constant == 0.0);
  CHECK(*check_max_banach(m, constant).tight_constant == 0.0);
  CHECK(*check_perimeter_kannan(m, constant).tight_constant == 0.0);
  CHECK(check_perimeter_reich(m, constant, {0.1, 0.1, 0.1, 0.1}).holds);
  CHECK(check_max_reich(m, constant, {0.1, 0.1, 0.1, 0.1}).holds);

  const SelfMap identity({0, 1, 2}, 3);
  const auto iso = check_perimeter_contraction(m, identity);
  CHECK(near(*iso.tight_constant, 1.0));
  CHECK_FALSE(iso.holds);
  CHECK(check_perimeter_kannan(m, identity).infeasible);
}

TEST_CASE("perimeter-kannan on the line example") {
  const auto report = check_perimeter_kannan(line3_metric(), line3_t1());
  REQUIRE(report.tight_constant.has_value());
  // image perimeter 2|a-b| = 2/5 against displacement sum |c-a| = 1
  CHECK(near(*report.tight_constant, 0.4));
  CHECK_FALSE(report.holds);  // 2/5 is not below the 1/3 bound
}

TEST_CASE("fixed-coefficient corollaries collapse to the tight forms") {
  Rng rng(10001);
  for (int round = 0; round < 20; ++round) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const auto m = random_metric_space(rng, n);
    const auto map = random_self_map(rng, n);
    std::uniform_real_distribution<double> pick(0.05, 0.9);
    const double lambda = pick(rng);
    CHECK(check_perimeter_reich(m, map, {0.0, 0.0, 0.0, lambda}).holds ==
          check_perimeter_contraction_at(m, map, lambda).holds);
    CHECK(check_max_reich(m, map, {0.0, 0.0, 0.0, lambda}).holds ==
          check_max_banach_at(m, map, lambda).holds);
  }
}

TEST_CASE("reduction equivalence with the G-metric checkers") {
  Rng rng(10002);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  std::uniform_real_distribution<double> third(0.02, 0.32);
  for (int round = 0; round < 25; ++round) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const auto m = random_metric_space(rng, n);
    const auto map = random_self_map(rng, n);
    const auto sum_space = g_from_metric_sum(m);
    const auto max_space = g_from_metric_max(m);

    // 4.2: perimeter at lambda <=> banach at lambda on the sum form
    {
      const double lambda = unit(rng);
      CHECK(check_perimeter_contraction_at(m, map, lambda).holds ==
            banach_check(sum_space, map, lambda).holds);
    }
    // 4.3: max form, unchanged constant
    {
      const double lambda = unit(rng);
      CHECK(check_max_banach_at(m, map, lambda).holds ==
            banach_check(max_space, map, lambda).holds);
    }
    // 4.4: kannan with halved constant on the sum form
    {
      const double lambda = third(rng);
      CHECK(check_perimeter_kannan_at(m, map, lambda).holds ==
            kannan_check(sum_space, map, lambda / 2.0).holds);
    }
    // 4.5a: reich with halved displacement coefficients on the sum form
    {
      ReichCoefficients c{unit(rng), unit(rng), unit(rng), unit(rng)};
      const double scale = 0.9 / c.sum();
      c = {c.a1 * scale, c.a2 * scale, c.a3 * scale, c.a4 * scale};
      CHECK(check_perimeter_reich(m, map, c).holds ==
            reich_check(sum_space, map, {c.a1 / 2, c.a2 / 2, c.a3 / 2, c.a4})
                .holds);
    }
    // 4.5b: reich with the same coefficients on the max form
    {
      ReichCoefficients c{unit(rng), unit(rng), unit(rng), unit(rng)};
      const double scale = 0.9 / c.sum();
      c = {c.a1 * scale, c.a2 * scale, c.a3 * scale, c.a4 * scale};
      CHECK(check_max_reich(m, map, c).holds ==
            reich_check(max_space, map, c).holds);
    }
  }
}

TEST_CASE("tight constants agree through the reductions") {
  Rng rng(10003);
  for (int round = 0; round < 20; ++round) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const auto m = random_metric_space(rng, n);
    const auto map = random_self_map(rng, n);
    const auto sum_space = g_from_metric_sum(m);
    const auto max_space = g_from_metric_max(m);

    CHECK(near(*check_perimeter_contraction(m, map).tight_constant,
               *banach_tight_lambda(sum_space, map).tight_constant, 1e-11));
    CHECK(near(*check_max_banach(m, map).tight_constant,
               *banach_tight_lambda(max_space, map).tight_constant, 1e-11));

    const auto metric_side = check_perimeter_kannan(m, map);
    const auto g_side = kannan_tight_lambda(sum_space, map);
    CHECK(metric_side.infeasible == g_side.infeasible);
    if (!metric_side.infeasible)
      CHECK(near(*metric_side.tight_constant, 2.0 * *g_side.tight_constant,
                 1e-11));
  }
}

TEST_CASE("corollary hypotheses imply the fixed-point guarantee") {
  Rng rng(10004);
  int qualified = 0;
  for (int round = 0; round < 200 && qualified < 25; ++round) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto m = random_metric_space(rng, n);
    const auto map = (round & 1) ? random_self_map(rng, n)
                                 : SelfMap(std::vector<int>(n, 0), n);
    if (!check_condition_one(g_from_metric_sum(m), map).holds) continue;
    const auto perim = check_perimeter_contraction(m, map);
    if (!perim.holds) continue;
    ++qualified;
    int fix = 0;
    for (int p = 0; p < n; ++p) fix += map(p) == p;
    CHECK(fix >= 1);
    CHECK(fix <= 2);
  }
  CHECK(qualified > 0);
}

TEST_CASE("too few points") {
  const auto m = euclidean_metric({{"p", {0.0}}, {"q", {1.0}}});
  CHECK_THROWS_AS(check_perimeter_contraction(m, SelfMap({0, 1}, 2)),
                  TooFewPointsError);
}

}  // TEST_SUITE
