// Picard iteration, fixed-point enumeration, and end-to-end verification of
// the contraction theorems' conclusion: under conditions (I) and (II),
// Fix(T) is nonempty with at most two elements and every orbit lands on a
// fixed point.
#pragma once

#include "gfix/conditions.hpp"
#include "gfix/core.hpp"

namespace gfix {

// All p with T(p) = p, in declaration order.
std::vector<PointId> enumerate_fixed_points(const FiniteGSpace& space,
                                            const SelfMap& map);

// Orbit u0 = start, u_{n+1} = T u_n. Stops at the first n with
// u_{n+1} = u_n (fixed point reached), at the first revisit of an earlier
// orbit point (cycle detected, period >= 2), or after max_steps map
// applications. max_steps <= 0 selects the pigeonhole default |X| + 1, which
// makes the step limit unreachable. The repeated point is not appended, so
// orbit entries are pairwise distinct.
IterationTrace picard_iterate(const FiniteGSpace& space, const SelfMap& map,
                              int start, int max_steps = 0);

struct OrbitCheck {
  IterationTrace trace;
  bool reached_fixed_point = false;
  // triple_values[k] <= triple_values[0] * rate^k + eps along the orbit.
  // `tight` uses the tight constant lambda*; `proof` uses the contraction
  // rate of the corresponding induction (see TheoremVerdict). Vacuously true
  // when the rate is unknown or the orbit records fewer than two triples.
  bool decay_within_tight = true;
  bool decay_within_proof = true;
};

struct TheoremVerdict {
  ContractionKind kind;
  ConditionOneReport condition_one;
  ConditionTwoReport condition_two;
  bool hypotheses_hold = false;
  std::vector<PointId> fixed_points;
  // Geometric rate of the induction step behind the theorem:
  //   banach          lambda*
  //   kannan          lambda* / (1 - 2 lambda*)
  //   reich (coeffs)  (a1 + a2 + a4) / (1 - a3)
  //   reich (uniform) 3 lambda* / (1 - lambda*)
  std::optional<double> proof_decay_rate;
  std::vector<OrbitCheck> orbits;  // one per start point, in order
  // Set only when both hypotheses hold: 1 <= |Fix(T)| <= 2 and every orbit
  // reaches a fixed point.
  std::optional<bool> conclusion_verified;
};

TheoremVerdict verify_theorem_conclusion(const FiniteGSpace& space,
                                         const SelfMap& map,
                                         const ContractionKind& kind,
                                         double eps = kDefaultEpsilon,
                                         Exec exec = Exec::Parallel);

}  // namespace gfix
