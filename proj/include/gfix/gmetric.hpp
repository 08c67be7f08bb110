// G-metric axiom verification, the two canonical constructions from an
// ordinary metric, the derived delta-metric, and convergence diagnostics on
// finite orbits.
//
// Axioms checked by verify_axioms, for all points x,y,z,w of the space:
//   P1  G(x,y,z) = 0 iff x = y = z
//   P2  x != y implies G(x,x,y) > 0
//   P3  G is invariant under every permutation of (x,y,z)
//   P4  y != z implies G(x,x,y) <= G(x,y,z)
//   P5  G(x,y,z) <= G(x,w,w) + G(w,y,z)
// The P5 scan is the O(n^4) kernel; all scans exist in serial and OpenMP
// variants that report the lexicographically smallest witness.
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "gfix/core.hpp"

namespace gfix {

struct AxiomVerdict {
  Axiom axiom = Axiom::P1;
  bool holds = false;
  // Point indices of the offending tuple (3 entries, 4 for P5); empty when
  // the axiom holds.
  std::vector<int> witness;
  double lhs = 0.0;
  double rhs = 0.0;
};

// One verdict per axiom, in P1..P5 order. Accepts an unvalidated space.
std::array<AxiomVerdict, 5> verify_axioms(const FiniteGSpace& space,
                                          double eps = kDefaultEpsilon,
                                          Exec exec = Exec::Parallel);

enum class MetricAxiom { Identity, Positivity, Symmetry, Triangle };
const char* metric_axiom_name(MetricAxiom axiom);

struct MetricVerdict {
  MetricAxiom axiom = MetricAxiom::Identity;
  bool holds = false;
  std::vector<int> witness;
};

// Identity of indiscernibles, positivity, symmetry and the O(n^3) triangle
// scan, in that order.
std::array<MetricVerdict, 4> verify_metric_axioms(const FiniteMetricSpace& m,
                                                  double eps = kDefaultEpsilon,
                                                  Exec exec = Exec::Parallel);

// G(x,y,z) = d(x,y) + d(y,z) + d(x,z). The result is validated by
// construction and satisfies G(x,y,y) = 2 d(x,y).
FiniteGSpace g_from_metric_sum(const FiniteMetricSpace& m,
                               double eps = kDefaultEpsilon,
                               Exec exec = Exec::Parallel);

// G(x,y,z) = max{d(x,y), d(y,z), d(x,z)}; satisfies G(x,y,y) = d(x,y).
FiniteGSpace g_from_metric_max(const FiniteMetricSpace& m,
                               double eps = kDefaultEpsilon,
                               Exec exec = Exec::Parallel);

// delta(x,y) = max{G(x,y,y), G(y,x,x)}, an ordinary metric on the same
// points. Requires a validated space.
FiniteMetricSpace delta_metric(const FiniteGSpace& space);

// Pairwise Euclidean distances over labeled coordinate vectors. All vectors
// must share one dimension; coincident points (distance <= eps between
// distinct labels) are rejected.
FiniteMetricSpace euclidean_metric(
    const std::vector<std::pair<std::string, std::vector<double>>>& points,
    double eps = kDefaultEpsilon);

// Convergence diagnostic: true iff every tail value G(u_n, u_m, u_m) over the
// final `window` entries of the orbit falls below tol. Finite orbits either
// stabilize or cycle; the stored orbit drops repeats, so the tail is taken
// from the conceptual continuation (terminal fixed point repeated, or the
// cycle unrolled).
bool is_g_cauchy_tail(const FiniteGSpace& space, const IterationTrace& trace,
                      double tol, int window = 3);

}  // namespace gfix
