#include "scan.hpp"

#include <algorithm>

namespace gfix::detail {

ConditionTwoReport make_tight_report(const RatioScan& scan, int n, double bound,
                                     double eps) {
  ConditionTwoReport report;
  report.bound = bound;
  if (scan.infeasible_flat != kNoFlat) {
    report.infeasible = true;
    report.holds = false;
    report.witness = decode_triple(scan.infeasible_flat, n);
    return report;
  }
  const double tight = scan.best_flat >= 0 ? std::max(scan.best_ratio, 0.0) : 0.0;
  report.tight_constant = tight;
  report.holds = tight < bound - eps;
  if (scan.best_flat >= 0) {
    report.witness = decode_triple(scan.best_flat, n);
    report.witness_lhs = scan.best_lhs;
    report.witness_rhs = scan.best_rhs;
  }
  if (report.holds)
    report.admissible = {tight, bound, tight <= eps, false};
  return report;
}

ConditionTwoReport make_fixed_report(const GapScan& scan, int n, double bound,
                                     double eps) {
  ConditionTwoReport report;
  report.bound = bound;
  report.holds = scan.worst_flat < 0 || scan.worst_gap <= eps;
  if (scan.worst_flat >= 0) {
    report.witness = decode_triple(scan.worst_flat, n);
    report.witness_lhs = scan.worst_lhs;
    report.witness_rhs = scan.worst_rhs;
  }
  return report;
}

}  // namespace gfix::detail
