// Metric-space frontends for the perimeter / max contraction classes, checked
// directly on pairwise distances over pairwise-distinct triples:
//   perimeter          d(Tx,Ty)+d(Ty,Tz)+d(Tz,Tx) <= c * perimeter(x,y,z)
//   max-banach         max image pair distance <= c * max pair distance
//   perimeter-kannan   image perimeter <= c * [d(x,Tx)+d(y,Ty)+d(z,Tz)]
//   perimeter-reich    image perimeter <= a1 d(x,Tx)+a2 d(y,Ty)+a3 d(z,Tz)
//                                         + a4 * perimeter(x,y,z)
//   max-reich          max image pair distance <= a1 d(x,Tx)+...+a4 * max
// Each checker is implemented natively on the metric; the equivalences with
// the G-metric conditions (sum form for the perimeter family with halved
// displacement coefficients, max form for the max family) are exercised as
// cross-checks in the test suite, not used as the implementation.
#pragma once

#include "gfix/conditions.hpp"
#include "gfix/core.hpp"

namespace gfix {

enum class CorollaryKind {
  PerimeterContraction,
  MaxBanach,
  PerimeterKannan,
  PerimeterReich,
  MaxReich,
};

const char* corollary_name(CorollaryKind kind);

TripleEval eval_perimeter(const FiniteMetricSpace& m, const SelfMap& map, int x,
                          int y, int z);
TripleEval eval_max_pairs(const FiniteMetricSpace& m, const SelfMap& map, int x,
                          int y, int z);
TripleEval eval_perimeter_kannan(const FiniteMetricSpace& m, const SelfMap& map,
                                 int x, int y, int z);
TripleEval eval_perimeter_reich(const FiniteMetricSpace& m, const SelfMap& map,
                                const ReichCoefficients& coeffs, int x, int y,
                                int z);
TripleEval eval_max_reich(const FiniteMetricSpace& m, const SelfMap& map,
                          const ReichCoefficients& coeffs, int x, int y, int z);

// Tight-constant scans (unordered triples; both sides symmetric).
ConditionTwoReport check_perimeter_contraction(const FiniteMetricSpace& m,
                                               const SelfMap& map,
                                               double eps = kDefaultEpsilon,
                                               Exec exec = Exec::Parallel);
ConditionTwoReport check_max_banach(const FiniteMetricSpace& m,
                                    const SelfMap& map,
                                    double eps = kDefaultEpsilon,
                                    Exec exec = Exec::Parallel);
ConditionTwoReport check_perimeter_kannan(const FiniteMetricSpace& m,
                                          const SelfMap& map,
                                          double eps = kDefaultEpsilon,
                                          Exec exec = Exec::Parallel);

// Fixed-coefficient scans (ordered triples).
ConditionTwoReport check_perimeter_reich(const FiniteMetricSpace& m,
                                         const SelfMap& map,
                                         const ReichCoefficients& coeffs,
                                         double eps = kDefaultEpsilon,
                                         Exec exec = Exec::Parallel);
ConditionTwoReport check_max_reich(const FiniteMetricSpace& m,
                                   const SelfMap& map,
                                   const ReichCoefficients& coeffs,
                                   double eps = kDefaultEpsilon,
                                   Exec exec = Exec::Parallel);

// Fixed-constant verdicts for the three tight-mode corollaries.
ConditionTwoReport check_perimeter_contraction_at(const FiniteMetricSpace& m,
                                                  const SelfMap& map,
                                                  double lambda,
                                                  double eps = kDefaultEpsilon,
                                                  Exec exec = Exec::Parallel);
ConditionTwoReport check_max_banach_at(const FiniteMetricSpace& m,
                                       const SelfMap& map, double lambda,
                                       double eps = kDefaultEpsilon,
                                       Exec exec = Exec::Parallel);
ConditionTwoReport check_perimeter_kannan_at(const FiniteMetricSpace& m,
                                             const SelfMap& map, double lambda,
                                             double eps = kDefaultEpsilon,
                                             Exec exec = Exec::Parallel);

}  // namespace gfix
