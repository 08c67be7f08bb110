#include "gfix/solver.hpp"

#include <cmath>

namespace gfix {

std::vector<PointId> enumerate_fixed_points(const FiniteGSpace& space,
                                            const SelfMap& map) {
  if (map.size() != space.size())
    throw SchemaError("map size does not match the space");
  std::vector<PointId> fixed;
  for (int p = 0; p < space.size(); ++p)
    if (map(p) == p) fixed.push_back(space.point(p));
  return fixed;
}

IterationTrace picard_iterate(const FiniteGSpace& space, const SelfMap& map,
                              int start, int max_steps) {
  if (!space.validated())
    throw SpaceError("picard_iterate requires a validated space");
  if (map.size() != space.size())
    throw SchemaError("map size does not match the space");
  if (start < 0 || start >= space.size())
    throw UnknownLabelError("start point is not in the space");
  if (max_steps <= 0) max_steps = space.size() + 1;

  IterationTrace trace;
  std::vector<int> position(space.size(), -1);
  int current = start;
  trace.orbit.push_back(space.point(current));
  position[current] = 0;
  trace.status = IterationTrace::Status::StepLimit;

  for (int step = 0; step < max_steps; ++step) {
    const int next = map(current);
    if (next == current) {
      trace.status = IterationTrace::Status::FixedPointReached;
      break;
    }
    if (position[next] >= 0) {
      trace.status = IterationTrace::Status::CycleDetected;
      trace.cycle_start = position[next];
      trace.cycle_length = static_cast<int>(trace.orbit.size()) - position[next];
      break;
    }
    trace.orbit.push_back(space.point(next));
    position[next] = static_cast<int>(trace.orbit.size()) - 1;
    current = next;
  }

  for (std::size_t i = 0; i + 2 < trace.orbit.size(); ++i)
    trace.triple_values.push_back(space(trace.orbit[i].index,
                                        trace.orbit[i + 1].index,
                                        trace.orbit[i + 2].index));
  return trace;
}

namespace {

bool decays_at_rate(const std::vector<double>& values, double rate, double eps) {
  if (values.size() < 2) return true;
  double bound = values.front();
  for (std::size_t k = 1; k < values.size(); ++k) {
    bound *= rate;
    if (values[k] > bound + eps) return false;
  }
  return true;
}

}  // namespace

TheoremVerdict verify_theorem_conclusion(const FiniteGSpace& space,
                                         const SelfMap& map,
                                         const ContractionKind& kind,
                                         double eps, Exec exec) {
  TheoremVerdict verdict;
  verdict.kind = kind;
  const auto conditions = check_conditions(space, map, kind, eps, exec);
  verdict.condition_one = conditions.condition_one;
  verdict.condition_two = conditions.condition_two;

  if (verdict.condition_two.holds) {
    switch (kind.kind) {
      case TheoremKind::Banach:
        verdict.proof_decay_rate = *verdict.condition_two.tight_constant;
        break;
      case TheoremKind::Kannan: {
        const double l = *verdict.condition_two.tight_constant;
        verdict.proof_decay_rate = l / (1.0 - 2.0 * l);
        break;
      }
      case TheoremKind::Reich:
        if (kind.coefficients) {
          const auto& c = *kind.coefficients;
          verdict.proof_decay_rate = (c.a1 + c.a2 + c.a4) / (1.0 - c.a3);
        } else {
          const double l = *verdict.condition_two.tight_constant;
          verdict.proof_decay_rate = 3.0 * l / (1.0 - l);
        }
        break;
    }
  }

  verdict.hypotheses_hold =
      verdict.condition_one.holds && verdict.condition_two.holds;
  verdict.fixed_points = enumerate_fixed_points(space, map);

  verdict.orbits.reserve(space.size());
  for (int start = 0; start < space.size(); ++start) {
    OrbitCheck check;
    check.trace = picard_iterate(space, map, start);
    check.reached_fixed_point =
        check.trace.status == IterationTrace::Status::FixedPointReached;
    if (verdict.condition_two.tight_constant)
      check.decay_within_tight = decays_at_rate(
          check.trace.triple_values, *verdict.condition_two.tight_constant, eps);
    if (verdict.proof_decay_rate)
      check.decay_within_proof =
          decays_at_rate(check.trace.triple_values, *verdict.proof_decay_rate, eps);
    verdict.orbits.push_back(std::move(check));
  }

  if (verdict.hypotheses_hold) {
    bool all_reach = true;
    for (const auto& orbit : verdict.orbits)
      all_reach = all_reach && orbit.reached_fixed_point;
    const auto fix_count = verdict.fixed_points.size();
    verdict.conclusion_verified = fix_count >= 1 && fix_count <= 2 && all_reach;
  }
  return verdict;
}

}  // namespace gfix
