#include "gfix/conditions.hpp"

#include <cstdio>

#include "scan.hpp"

namespace gfix {

namespace {

void require_checkable(const FiniteGSpace& space, const SelfMap& map) {
  if (!space.validated())
    throw SpaceError("condition checks require a validated space");
  if (map.size() != space.size())
    throw SchemaError("map size does not match the space");
  if (space.size() < 3)
    throw TooFewPointsError("condition checks require at least 3 points");
}

}  // namespace

const char* theorem_name(TheoremKind kind) {
  switch (kind) {
    case TheoremKind::Banach: return "banach";
    case TheoremKind::Kannan: return "kannan";
    case TheoremKind::Reich: return "reich";
  }
  return "?";
}

void ReichCoefficients::validate() const {
  for (double a : {a1, a2, a3, a4})
    if (!(a >= 0.0))
      throw InvalidCoefficientsError("reich coefficients must be nonnegative");
  const double s = sum();
  if (!(s > 0.0 && s < 1.0)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "reich coefficient sum %.17g must lie in (0, 1)", s);
    throw InvalidCoefficientsError(buf);
  }
}

TripleEval eval_banach(const FiniteGSpace& space, const SelfMap& map, int x,
                       int y, int z) {
  return {space(map(x), map(y), map(z)), space(x, y, z)};
}

TripleEval eval_kannan(const FiniteGSpace& space, const SelfMap& map, int x,
                       int y, int z) {
  const double displacement = space(x, map(x), map(x)) +
                              space(y, map(y), map(y)) +
                              space(z, map(z), map(z));
  return {space(map(x), map(y), map(z)), displacement};
}

TripleEval eval_reich(const FiniteGSpace& space, const SelfMap& map,
                      const ReichCoefficients& c, int x, int y, int z) {
  const double rhs = c.a1 * space(x, map(x), map(x)) +
                     c.a2 * space(y, map(y), map(y)) +
                     c.a3 * space(z, map(z), map(z)) + c.a4 * space(x, y, z);
  return {space(map(x), map(y), map(z)), rhs};
}

ConditionOneReport check_condition_one(const FiniteGSpace& space,
                                       const SelfMap& map) {
  if (map.size() != space.size())
    throw SchemaError("map size does not match the space");
  for (int x = 0; x < space.size(); ++x) {
    const int tx = map(x);
    if (tx != x && map(tx) == x)
      return {false, space.point(x)};
  }
  return {true, std::nullopt};
}

ConditionTwoReport banach_tight_lambda(const FiniteGSpace& space,
                                       const SelfMap& map, double eps,
                                       Exec exec) {
  require_checkable(space, map);
  const auto scan = detail::ratio_scan(
      space.size(), /*ordered=*/false, eps, exec,
      [&](int x, int y, int z) { return eval_banach(space, map, x, y, z); });
  return detail::make_tight_report(scan, space.size(), kBanachBound, eps);
}

ConditionTwoReport kannan_tight_lambda(const FiniteGSpace& space,
                                       const SelfMap& map, double eps,
                                       Exec exec) {
  require_checkable(space, map);
  const auto scan = detail::ratio_scan(
      space.size(), /*ordered=*/false, eps, exec,
      [&](int x, int y, int z) { return eval_kannan(space, map, x, y, z); });
  return detail::make_tight_report(scan, space.size(), kKannanBound, eps);
}

ConditionTwoReport reich_check(const FiniteGSpace& space, const SelfMap& map,
                               const ReichCoefficients& coeffs, double eps,
                               Exec exec) {
  require_checkable(space, map);
  coeffs.validate();
  const auto scan = detail::gap_scan(
      space.size(), /*ordered=*/true, exec, [&](int x, int y, int z) {
        return eval_reich(space, map, coeffs, x, y, z);
      });
  return detail::make_fixed_report(scan, space.size(), 1.0, eps);
}

ConditionTwoReport reich_uniform_tight_lambda(const FiniteGSpace& space,
                                              const SelfMap& map, double eps,
                                              Exec exec) {
  require_checkable(space, map);
  const auto scan = detail::ratio_scan(
      space.size(), /*ordered=*/true, eps, exec, [&](int x, int y, int z) {
        // denominator is the reich RHS with unit coefficients
        return eval_reich(space, map, {1.0, 1.0, 1.0, 1.0}, x, y, z);
      });
  return detail::make_tight_report(scan, space.size(), kReichUniformBound, eps);
}

ConditionTwoReport banach_check(const FiniteGSpace& space, const SelfMap& map,
                                double lambda, double eps, Exec exec) {
  require_checkable(space, map);
  if (!(lambda > 0.0 && lambda < kBanachBound))
    throw InvalidCoefficientsError("banach constant must lie in (0, 1)");
  const auto scan = detail::gap_scan(
      space.size(), /*ordered=*/false, exec, [&](int x, int y, int z) {
        auto e = eval_banach(space, map, x, y, z);
        return TripleEval{e.lhs, lambda * e.rhs};
      });
  return detail::make_fixed_report(scan, space.size(), kBanachBound, eps);
}

ConditionTwoReport kannan_check(const FiniteGSpace& space, const SelfMap& map,
                                double lambda, double eps, Exec exec) {
  require_checkable(space, map);
  if (!(lambda > 0.0 && lambda < kKannanBound))
    throw InvalidCoefficientsError("kannan constant must lie in (0, 1/3)");
  const auto scan = detail::gap_scan(
      space.size(), /*ordered=*/false, exec, [&](int x, int y, int z) {
        auto e = eval_kannan(space, map, x, y, z);
        return TripleEval{e.lhs, lambda * e.rhs};
      });
  return detail::make_fixed_report(scan, space.size(), kKannanBound, eps);
}

ConditionReport check_conditions(const FiniteGSpace& space, const SelfMap& map,
                                 const ContractionKind& kind, double eps,
                                 Exec exec) {
  ConditionReport report;
  report.condition_one = check_condition_one(space, map);
  switch (kind.kind) {
    case TheoremKind::Banach:
      report.condition_two = banach_tight_lambda(space, map, eps, exec);
      break;
    case TheoremKind::Kannan:
      report.condition_two = kannan_tight_lambda(space, map, eps, exec);
      break;
    case TheoremKind::Reich:
      report.condition_two =
          kind.coefficients
              ? reich_check(space, map, *kind.coefficients, eps, exec)
              : reich_uniform_tight_lambda(space, map, eps, exec);
      break;
  }
  return report;
}

}  // namespace gfix
