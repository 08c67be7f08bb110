#include <doctest.h>

#include "gfix/solver.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"
#include "support/instances.hpp"

using namespace gfix;
using namespace gfix::testsupport;

namespace {

std::vector<std::string> labels_of(const std::vector<PointId>& points) {
  std::vector<std::string> out;
  for (const auto& p : points) out.push_back(p.label);
  return out;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("fixed points of the worked examples") {
  CHECK(labels_of(enumerate_fixed_points(plane3_space(), plane3_t1())) ==
        std::vector<std::string>{"A", "B"});
  CHECK(enumerate_fixed_points(plane3_space(), plane3_t2()).empty());
  CHECK(labels_of(enumerate_fixed_points(line3_space(), line3_t1())) ==
        std::vector<std::string>{"a", "b"});
  CHECK(labels_of(enumerate_fixed_points(reich_family_space(0.125),
                                         reich_family_map())) ==
        std::vector<std::string>{"a", "b"});
}

TEST_CASE("picard orbit reaching a fixed point") {
  const auto trace = picard_iterate(plane3_space(), plane3_t1(), 2);
  CHECK(trace.status == IterationTrace::Status::FixedPointReached);
  CHECK(labels_of(trace.orbit) == std::vector<std::string>{"C", "A"});
  CHECK(trace.triple_values.empty());
}

TEST_CASE("picard orbit detecting the 2-cycle") {
  const auto space = plane3_space();
  const auto trace = picard_iterate(space, plane3_t2(), 2);
  CHECK(trace.status == IterationTrace::Status::CycleDetected);
  CHECK(labels_of(trace.orbit) == std::vector<std::string>{"C", "A", "B"});
  CHECK(trace.cycle_start == 1);
  CHECK(trace.cycle_length == 2);
  // re-applying the map around the cycle returns to its start
  int p = trace.orbit[trace.cycle_start].index;
  for (int k = 0; k < trace.cycle_length; ++k) p = plane3_t2()(p);
  CHECK(p == trace.orbit[trace.cycle_start].index);
  REQUIRE(trace.triple_values.size() == 1);
  CHECK(near(trace.triple_values[0], space(2, 0, 1)));
}

TEST_CASE("picard orbit from a fixed start") {
  const auto trace = picard_iterate(plane3_space(), plane3_t1(), 0);
  CHECK(trace.status == IterationTrace::Status::FixedPointReached);
  CHECK(trace.orbit.size() == 1);
  CHECK(trace.orbit[0].label == "A");
}

TEST_CASE("picard errors and step limit") {
  CHECK_THROWS_AS(picard_iterate(plane3_space(), plane3_t1(), -1),
                  UnknownLabelError);
  CHECK_THROWS_AS(picard_iterate(plane3_space(), plane3_t1(), 3),
                  UnknownLabelError);
  // chain c -> b -> a cut off after one application
  const auto space = line3_space();
  const SelfMap chain({0, 0, 1}, 3);
  const auto trace = picard_iterate(space, chain, 2, 1);
  CHECK(trace.status == IterationTrace::Status::StepLimit);
  CHECK(trace.orbit.size() == 2);
}

TEST_CASE("orbits terminate within |X| + 1 steps on random instances") {
  Rng rng(9001);
  for (int round = 0; round < 30; ++round) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto inst = random_instance(rng, n);
    for (int start = 0; start < n; ++start) {
      const auto trace = picard_iterate(inst.space, inst.map, start);
      CHECK(trace.status != IterationTrace::Status::StepLimit);
      CHECK(static_cast<int>(trace.orbit.size()) <= n);
      if (trace.status == IterationTrace::Status::FixedPointReached) {
        const int last = trace.orbit.back().index;
        CHECK(inst.map(last) == last);
      } else {
        CHECK(trace.cycle_length >= 2);
        int p = trace.orbit[trace.cycle_start].index;
        for (int k = 0; k < trace.cycle_length; ++k) p = inst.map(p);
        CHECK(p == trace.orbit[trace.cycle_start].index);
      }
    }
  }
}

TEST_CASE("2-cycles are detected exactly when condition (I) fails") {
  Rng rng(9002);
  for (int round = 0; round < 40; ++round) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto inst = random_instance(rng, n);
    bool saw_period_two = false;
    for (int start = 0; start < n; ++start) {
      const auto trace = picard_iterate(inst.space, inst.map, start);
      if (trace.status == IterationTrace::Status::CycleDetected &&
          trace.cycle_length == 2)
        saw_period_two = true;
    }
    CHECK(saw_period_two == !check_condition_one(inst.space, inst.map).holds);
  }
}

TEST_CASE("verify_theorem_conclusion on the kannan example") {
  const auto verdict = verify_theorem_conclusion(
      line3_space(), line3_t1(), {TheoremKind::Kannan, std::nullopt});
  CHECK(verdict.condition_one.holds);
  CHECK(verdict.condition_two.holds);
  CHECK(verdict.hypotheses_hold);
  CHECK(labels_of(verdict.fixed_points) == std::vector<std::string>{"a", "b"});
  REQUIRE(verdict.conclusion_verified.has_value());
  CHECK(*verdict.conclusion_verified);
  for (const auto& orbit : verdict.orbits) CHECK(orbit.reached_fixed_point);
}

TEST_CASE("negative control: condition (I) failure blocks any conclusion") {
  const auto verdict = verify_theorem_conclusion(
      plane3_space(), plane3_t2(), {TheoremKind::Banach, std::nullopt});
  CHECK_FALSE(verdict.condition_one.holds);
  CHECK(verdict.condition_two.holds);  // (II) alone is satisfied
  CHECK_FALSE(verdict.hypotheses_hold);
  CHECK_FALSE(verdict.conclusion_verified.has_value());
  CHECK(verdict.fixed_points.empty());
}

TEST_CASE("qualifying instances satisfy the fixed-point guarantee") {
  Rng rng(9003);
  int banach_seen = 0, kannan_seen = 0, reich_seen = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto inst = contractive_candidate(rng, n);
    if (!check_condition_one(inst.space, inst.map).holds) continue;

    for (const auto kind :
         {TheoremKind::Banach, TheoremKind::Kannan, TheoremKind::Reich}) {
      const auto verdict =
          verify_theorem_conclusion(inst.space, inst.map, {kind, std::nullopt});
      if (!verdict.hypotheses_hold) continue;
      (kind == TheoremKind::Banach
           ? banach_seen
           : kind == TheoremKind::Kannan ? kannan_seen : reich_seen)++;
      const auto fix = verdict.fixed_points.size();
      CHECK(fix >= 1);
      CHECK(fix <= 2);
      for (const auto& orbit : verdict.orbits) {
        CHECK(orbit.reached_fixed_point);
        CHECK(orbit.decay_within_proof);
      }
      if (kind == TheoremKind::Banach)
        for (const auto& orbit : verdict.orbits)
          CHECK(orbit.decay_within_tight);
    }
    if (banach_seen > 15 && kannan_seen > 15 && reich_seen > 15) break;
  }
  CHECK(banach_seen > 5);
  CHECK(kannan_seen > 5);
  CHECK(reich_seen > 5);
}

}  // TEST_SUITE
