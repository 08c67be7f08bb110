// Worked-example instances used across the unit and acceptance suites, built
// from raw coordinates through the production constructors.
#pragma once

#include <cmath>

#include "gfix/conditions.hpp"
#include "gfix/gmetric.hpp"

namespace gfix::testsupport {

// Three points of the plane: A = (7/8, sqrt(15)/8), B = (1,0), C = (0,0);
// ||A-B|| = 1/2, ||A-C|| = ||B-C|| = 1. Max-form G-metric.
inline FiniteMetricSpace plane3_metric() {
  return euclidean_metric({{"A", {7.0 / 8.0, std::sqrt(15.0) / 8.0}},
                           {"B", {1.0, 0.0}},
                           {"C", {0.0, 0.0}}});
}

inline FiniteGSpace plane3_space() { return g_from_metric_max(plane3_metric()); }

// T1: A -> A, B -> B, C -> A
inline SelfMap plane3_t1() { return SelfMap({0, 1, 0}, 3); }
// T2: A -> B, B -> A, C -> A
inline SelfMap plane3_t2() { return SelfMap({1, 0, 0}, 3); }

// Three points of the line: a = 0, b = 1/5, c = 1. Max-form G-metric.
inline FiniteMetricSpace line3_metric() {
  return euclidean_metric({{"a", {0.0}}, {"b", {0.2}}, {"c", {1.0}}});
}

inline FiniteGSpace line3_space() { return g_from_metric_max(line3_metric()); }

inline SelfMap line3_t1() { return SelfMap({0, 1, 0}, 3); }
inline SelfMap line3_t2() { return SelfMap({1, 0, 0}, 3); }

// Four points of the line parameterized by lambda in (0, 1/4):
// a = 0, b = 2 lambda / (2 lambda - 1), c = 1, d = 2. Max-form G-metric.
// The map fixes a and b and sends c, d to b.
inline FiniteMetricSpace reich_family_metric(double lambda) {
  const double b = 2.0 * lambda / (2.0 * lambda - 1.0);
  return euclidean_metric(
      {{"a", {0.0}}, {"b", {b}}, {"c", {1.0}}, {"d", {2.0}}});
}

inline FiniteGSpace reich_family_space(double lambda) {
  return g_from_metric_max(reich_family_metric(lambda));
}

inline SelfMap reich_family_map() { return SelfMap({0, 1, 1, 1}, 4); }

}  // namespace gfix::testsupport
