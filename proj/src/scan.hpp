// Internal triple-enumeration kernels shared by the condition and corollary
// checkers. Two scan shapes:
//   ratio_scan  — supremum of LHS/RHS over admissible triples, plus an
//                 infeasibility certificate when RHS vanishes with LHS > 0;
//   gap_scan    — worst LHS - RHS over admissible triples (fixed constants).
// Both enumerate either unordered (x < y < z) or ordered pairwise-distinct
// triples, serially or across OpenMP threads. The merge rule is a total
// order on (value, flat index), so the parallel result and witness are
// identical to the serial ones.
#pragma once

#include <array>
#include <limits>

#include "gfix/core.hpp"

namespace gfix::detail {

inline constexpr long long kNoFlat = std::numeric_limits<long long>::max();

inline std::array<int, 3> decode_triple(long long flat, long long n) {
  return {static_cast<int>(flat / (n * n)), static_cast<int>((flat / n) % n),
          static_cast<int>(flat % n)};
}

struct RatioScan {
  double best_ratio = -std::numeric_limits<double>::infinity();
  long long best_flat = -1;
  double best_lhs = 0.0;
  double best_rhs = 0.0;
  long long infeasible_flat = kNoFlat;

  void merge(const RatioScan& other) {
    if (other.best_flat >= 0 &&
        (best_flat < 0 || other.best_ratio > best_ratio ||
         (other.best_ratio == best_ratio && other.best_flat < best_flat))) {
      best_ratio = other.best_ratio;
      best_flat = other.best_flat;
      best_lhs = other.best_lhs;
      best_rhs = other.best_rhs;
    }
    if (other.infeasible_flat < infeasible_flat)
      infeasible_flat = other.infeasible_flat;
  }
};

struct GapScan {
  double worst_gap = -std::numeric_limits<double>::infinity();
  long long worst_flat = -1;
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;

  void merge(const GapScan& other) {
    if (other.worst_flat >= 0 &&
        (worst_flat < 0 || other.worst_gap > worst_gap ||
         (other.worst_gap == worst_gap && other.worst_flat < worst_flat))) {
      *this = other;
    }
  }
};

// Eval: (x, y, z) -> struct with .lhs and .rhs
template <class Eval>
void ratio_scan_row(int x, int n, bool ordered, double eps, const Eval& eval,
                    RatioScan& acc) {
  const long long nn = n;
  for (int y = ordered ? 0 : x + 1; y < n; ++y) {
    if (y == x) continue;
    for (int z = ordered ? 0 : y + 1; z < n; ++z) {
      if (z == x || z == y) continue;
      const auto e = eval(x, y, z);
      const long long flat = (x * nn + y) * nn + z;
      if (e.rhs <= eps) {
        if (e.lhs > eps && flat < acc.infeasible_flat) acc.infeasible_flat = flat;
        continue;
      }
      const double ratio = e.lhs / e.rhs;
      if (acc.best_flat < 0 || ratio > acc.best_ratio ||
          (ratio == acc.best_ratio && flat < acc.best_flat)) {
        acc.best_ratio = ratio;
        acc.best_flat = flat;
        acc.best_lhs = e.lhs;
        acc.best_rhs = e.rhs;
      }
    }
  }
}

template <class Eval>
RatioScan ratio_scan(int n, bool ordered, double eps, Exec exec,
                     const Eval& eval) {
  RatioScan result;
  if (exec == Exec::Serial) {
    for (int x = 0; x < n; ++x)
      ratio_scan_row(x, n, ordered, eps, eval, result);
    return result;
  }
#pragma omp parallel
  {
    RatioScan local;
#pragma omp for schedule(dynamic) nowait
    for (int x = 0; x < n; ++x)
      ratio_scan_row(x, n, ordered, eps, eval, local);
#pragma omp critical(gfix_ratio_scan_merge)
    result.merge(local);
  }
  return result;
}

template <class Eval>
void gap_scan_row(int x, int n, bool ordered, const Eval& eval, GapScan& acc) {
  const long long nn = n;
  for (int y = ordered ? 0 : x + 1; y < n; ++y) {
    if (y == x) continue;
    for (int z = ordered ? 0 : y + 1; z < n; ++z) {
      if (z == x || z == y) continue;
      const auto e = eval(x, y, z);
      const double gap = e.lhs - e.rhs;
      const long long flat = (x * nn + y) * nn + z;
      if (acc.worst_flat < 0 || gap > acc.worst_gap ||
          (gap == acc.worst_gap && flat < acc.worst_flat)) {
        acc.worst_gap = gap;
        acc.worst_flat = flat;
        acc.worst_lhs = e.lhs;
        acc.worst_rhs = e.rhs;
      }
    }
  }
}

template <class Eval>
GapScan gap_scan(int n, bool ordered, Exec exec, const Eval& eval) {
  GapScan result;
  if (exec == Exec::Serial) {
    for (int x = 0; x < n; ++x) gap_scan_row(x, n, ordered, eval, result);
    return result;
  }
#pragma omp parallel
  {
    GapScan local;
#pragma omp for schedule(dynamic) nowait
    for (int x = 0; x < n; ++x) gap_scan_row(x, n, ordered, eval, local);
#pragma omp critical(gfix_gap_scan_merge)
    result.merge(local);
  }
  return result;
}

// Assembles the tight-constant report out of a ratio scan.
ConditionTwoReport make_tight_report(const RatioScan& scan, int n, double bound,
                                     double eps);

// Assembles the fixed-constant report out of a gap scan.
ConditionTwoReport make_fixed_report(const GapScan& scan, int n, double bound,
                                     double eps);

}  // namespace gfix::detail
