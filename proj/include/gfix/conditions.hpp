// Contraction-condition checkers over pairwise-distinct triples.
//
// Condition (I) is the no-2-cycle requirement: T(Tx) != x whenever Tx != x.
// Condition (II) comes in three shapes, each evaluated only on pairwise
// distinct points x, y, z:
//   banach   G(Tx,Ty,Tz) <= c * G(x,y,z),                        c in (0,1)
//   kannan   G(Tx,Ty,Tz) <= c * [G(x,Tx,Tx)+G(y,Ty,Ty)+G(z,Tz,Tz)],
//                                                                c in (0,1/3)
//   reich    G(Tx,Ty,Tz) <= a1 G(x,Tx,Tx) + a2 G(y,Ty,Ty)
//                           + a3 G(z,Tz,Tz) + a4 G(x,y,z),
//            a_i >= 0 and 0 < a1+a2+a3+a4 < 1
// The *_tight_lambda checkers report the supremum ratio lambda* (the
// smallest workable constant); the *_check variants test fixed constants.
// Banach and kannan sides are permutation-invariant, so those scans run over
// unordered triples; reich scans are ordered because general coefficients
// break the symmetry.
#pragma once

#include "gfix/core.hpp"

namespace gfix {

enum class TheoremKind { Banach, Kannan, Reich };
const char* theorem_name(TheoremKind kind);

inline constexpr double kBanachBound = 1.0;
inline constexpr double kKannanBound = 1.0 / 3.0;
inline constexpr double kReichUniformBound = 0.25;

struct ReichCoefficients {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;
  double sum() const { return a1 + a2 + a3 + a4; }
  // a_i >= 0 and 0 < sum < 1; throws InvalidCoefficientsError otherwise.
  void validate() const;
  static ReichCoefficients uniform(double lambda) {
    return {lambda, lambda, lambda, lambda};
  }
};

struct ContractionKind {
  TheoremKind kind = TheoremKind::Banach;
  std::optional<ReichCoefficients> coefficients;  // reich only
};

struct TripleEval {
  double lhs = 0.0;
  double rhs = 0.0;
};

TripleEval eval_banach(const FiniteGSpace& space, const SelfMap& map, int x,
                       int y, int z);
TripleEval eval_kannan(const FiniteGSpace& space, const SelfMap& map, int x,
                       int y, int z);
TripleEval eval_reich(const FiniteGSpace& space, const SelfMap& map,
                      const ReichCoefficients& coeffs, int x, int y, int z);

// Condition (I): fails iff some point sits on a 2-cycle; the witness is the
// smallest-index such point.
ConditionOneReport check_condition_one(const FiniteGSpace& space,
                                       const SelfMap& map);

// Supremum over unordered pairwise-distinct triples of
// G(Tx,Ty,Tz) / G(x,y,z); satisfiable iff lambda* < 1.
ConditionTwoReport banach_tight_lambda(const FiniteGSpace& space,
                                       const SelfMap& map,
                                       double eps = kDefaultEpsilon,
                                       Exec exec = Exec::Parallel);

// Supremum of G(Tx,Ty,Tz) / [G(x,Tx,Tx)+G(y,Ty,Ty)+G(z,Tz,Tz)]; satisfiable
// iff lambda* < 1/3. Infeasible when some triple has zero displacement sum
// but a positive left side.
ConditionTwoReport kannan_tight_lambda(const FiniteGSpace& space,
                                       const SelfMap& map,
                                       double eps = kDefaultEpsilon,
                                       Exec exec = Exec::Parallel);

// Reich inequality at fixed coefficients over ordered distinct triples;
// the witness is the triple maximizing LHS - RHS.
ConditionTwoReport reich_check(const FiniteGSpace& space, const SelfMap& map,
                               const ReichCoefficients& coeffs,
                               double eps = kDefaultEpsilon,
                               Exec exec = Exec::Parallel);

// Uniform-coefficient reich supremum: max over ordered distinct triples of
// G(Tx,Ty,Tz) / [G(x,Tx,Tx)+G(y,Ty,Ty)+G(z,Tz,Tz)+G(x,y,z)]; satisfiable iff
// lambda* < 1/4 (so that the coefficient sum stays below 1).
ConditionTwoReport reich_uniform_tight_lambda(const FiniteGSpace& space,
                                              const SelfMap& map,
                                              double eps = kDefaultEpsilon,
                                              Exec exec = Exec::Parallel);

// Fixed-constant verdicts for the banach / kannan inequalities. The lambda
// must lie in the theorem's open interval.
ConditionTwoReport banach_check(const FiniteGSpace& space, const SelfMap& map,
                                double lambda, double eps = kDefaultEpsilon,
                                Exec exec = Exec::Parallel);
ConditionTwoReport kannan_check(const FiniteGSpace& space, const SelfMap& map,
                                double lambda, double eps = kDefaultEpsilon,
                                Exec exec = Exec::Parallel);

// Both hypotheses of the chosen theorem in one bundle. Condition (II) runs
// in tight mode unless the kind carries fixed reich coefficients.
ConditionReport check_conditions(const FiniteGSpace& space, const SelfMap& map,
                                 const ContractionKind& kind,
                                 double eps = kDefaultEpsilon,
                                 Exec exec = Exec::Parallel);

}  // namespace gfix
