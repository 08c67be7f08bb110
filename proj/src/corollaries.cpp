#include "gfix/corollaries.hpp"

#include <algorithm>

#include "scan.hpp"

namespace gfix {

namespace {

void require_checkable(const FiniteMetricSpace& m, const SelfMap& map) {
  if (map.size() != m.size())
    throw SchemaError("map size does not match the space");
  if (m.size() < 3)
    throw TooFewPointsError("corollary checks require at least 3 points");
}

double perimeter(const FiniteMetricSpace& m, int x, int y, int z) {
  return m(x, y) + m(y, z) + m(x, z);
}

double max_pair(const FiniteMetricSpace& m, int x, int y, int z) {
  return std::max(m(x, y), std::max(m(y, z), m(x, z)));
}

}  // namespace

const char* corollary_name(CorollaryKind kind) {
  switch (kind) {
    case CorollaryKind::PerimeterContraction: return "perimeter";
    case CorollaryKind::MaxBanach: return "max-banach";
    case CorollaryKind::PerimeterKannan: return "perimeter-kannan";
    case CorollaryKind::PerimeterReich: return "perimeter-reich";
    case CorollaryKind::MaxReich: return "max-reich";
  }
  return "?";
}

TripleEval eval_perimeter(const FiniteMetricSpace& m, const SelfMap& map, int x,
                          int y, int z) {
  return {perimeter(m, map(x), map(y), map(z)), perimeter(m, x, y, z)};
}

TripleEval eval_max_pairs(const FiniteMetricSpace& m, const SelfMap& map, int x,
                          int y, int z) {
  return {max_pair(m, map(x), map(y), map(z)), max_pair(m, x, y, z)};
}

TripleEval eval_perimeter_kannan(const FiniteMetricSpace& m, const SelfMap& map,
                                 int x, int y, int z) {
  const double displacement = m(x, map(x)) + m(y, map(y)) + m(z, map(z));
  return {perimeter(m, map(x), map(y), map(z)), displacement};
}

TripleEval eval_perimeter_reich(const FiniteMetricSpace& m, const SelfMap& map,
                                const ReichCoefficients& c, int x, int y,
                                int z) {
  const double rhs = c.a1 * m(x, map(x)) + c.a2 * m(y, map(y)) +
                     c.a3 * m(z, map(z)) + c.a4 * perimeter(m, x, y, z);
  return {perimeter(m, map(x), map(y), map(z)), rhs};
}

TripleEval eval_max_reich(const FiniteMetricSpace& m, const SelfMap& map,
                          const ReichCoefficients& c, int x, int y, int z) {
  const double rhs = c.a1 * m(x, map(x)) + c.a2 * m(y, map(y)) +
                     c.a3 * m(z, map(z)) + c.a4 * max_pair(m, x, y, z);
  return {max_pair(m, map(x), map(y), map(z)), rhs};
}

ConditionTwoReport check_perimeter_contraction(const FiniteMetricSpace& m,
                                               const SelfMap& map, double eps,
                                               Exec exec) {
  require_checkable(m, map);
  const auto scan = detail::ratio_scan(
      m.size(), /*ordered=*/false, eps, exec,
      [&](int x, int y, int z) { return eval_perimeter(m, map, x, y, z); });
  return detail::make_tight_report(scan, m.size(), 1.0, eps);
}

ConditionTwoReport check_max_banach(const FiniteMetricSpace& m,
                                    const SelfMap& map, double eps, Exec exec) {
  require_checkable(m, map);
  const auto scan = detail::ratio_scan(
      m.size(), /*ordered=*/false, eps, exec,
      [&](int x, int y, int z) { return eval_max_pairs(m, map, x, y, z); });
  return detail::make_tight_report(scan, m.size(), 1.0, eps);
}

ConditionTwoReport check_perimeter_kannan(const FiniteMetricSpace& m,
                                          const SelfMap& map, double eps,
                                          Exec exec) {
  require_checkable(m, map);
  const auto scan = detail::ratio_scan(
      m.size(), /*ordered=*/false, eps, exec, [&](int x, int y, int z) {
        return eval_perimeter_kannan(m, map, x, y, z);
      });
  return detail::make_tight_report(scan, m.size(), kKannanBound, eps);
}

ConditionTwoReport check_perimeter_reich(const FiniteMetricSpace& m,
                                         const SelfMap& map,
                                         const ReichCoefficients& coeffs,
                                         double eps, Exec exec) {
  require_checkable(m, map);
  coeffs.validate();
  const auto scan = detail::gap_scan(
      m.size(), /*ordered=*/true, exec, [&](int x, int y, int z) {
        return eval_perimeter_reich(m, map, coeffs, x, y, z);
      });
  return detail::make_fixed_report(scan, m.size(), 1.0, eps);
}

ConditionTwoReport check_max_reich(const FiniteMetricSpace& m,
                                   const SelfMap& map,
                                   const ReichCoefficients& coeffs, double eps,
                                   Exec exec) {
  require_checkable(m, map);
  coeffs.validate();
  const auto scan = detail::gap_scan(
      m.size(), /*ordered=*/true, exec, [&](int x, int y, int z) {
        return eval_max_reich(m, map, coeffs, x, y, z);
      });
  return detail::make_fixed_report(scan, m.size(), 1.0, eps);
}

ConditionTwoReport check_perimeter_contraction_at(const FiniteMetricSpace& m,
                                                  const SelfMap& map,
                                                  double lambda, double eps,
                                                  Exec exec) {
  require_checkable(m, map);
  if (!(lambda > 0.0 && lambda < 1.0))
    throw InvalidCoefficientsError("perimeter constant must lie in (0, 1)");
  const auto scan = detail::gap_scan(
      m.size(), /*ordered=*/false, exec, [&](int x, int y, int z) {
        auto e = eval_perimeter(m, map, x, y, z);
        return TripleEval{e.lhs, lambda * e.rhs};
      });
  return detail::make_fixed_report(scan, m.size(), 1.0, eps);
}

ConditionTwoReport check_max_banach_at(const FiniteMetricSpace& m,
                                       const SelfMap& map, double lambda,
                                       double eps, Exec exec) {
  require_checkable(m, map);
  if (!(lambda > 0.0 && lambda < 1.0))
    throw InvalidCoefficientsError("max-banach constant must lie in (0, 1)");
  const auto scan = detail::gap_scan(
      m.size(), /*ordered=*/false, exec, [&](int x, int y, int z) {
        auto e = eval_max_pairs(m, map, x, y, z);
        return TripleEval{e.lhs, lambda * e.rhs};
      });
  return detail::make_fixed_report(scan, m.size(), 1.0, eps);
}

ConditionTwoReport check_perimeter_kannan_at(const FiniteMetricSpace& m,
                                             const SelfMap& map, double lambda,
                                             double eps, Exec exec) {
  require_checkable(m, map);
  if (!(lambda > 0.0 && lambda < kKannanBound))
    throw InvalidCoefficientsError(
        "perimeter-kannan constant must lie in (0, 1/3)");
  const auto scan = detail::gap_scan(
      m.size(), /*ordered=*/false, exec, [&](int x, int y, int z) {
        auto e = eval_perimeter_kannan(m, map, x, y, z);
        return TripleEval{e.lhs, lambda * e.rhs};
      });
  return detail::make_fixed_report(scan, m.size(), kKannanBound, eps);
}

}  // namespace gfix
