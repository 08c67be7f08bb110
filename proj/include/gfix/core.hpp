// Core domain types for finite G-metric spaces: labeled point sets, the
// ternary G-value table, ordinary metric tables, self-maps, and the report
// and trace structures shared by the checker modules.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gfix {

// Absolute tolerance used by every equality / inequality verdict.
// Non-strict inequalities `lhs <= rhs` are accepted when `lhs <= rhs + eps`;
// strict inequalities require a gap larger than eps.
inline constexpr double kDefaultEpsilon = 1e-9;

// Execution mode for the enumeration kernels. Serial is the reference
// implementation; Parallel partitions the scan across OpenMP threads and
// must return bit-identical verdicts and witnesses.
enum class Exec { Serial, Parallel };

enum class Axiom { P1, P2, P3, P4, P5 };
const char* axiom_name(Axiom axiom);

struct PointId {
  int index = -1;
  std::string label;
};

inline bool operator==(const PointId& a, const PointId& b) {
  return a.index == b.index && a.label == b.label;
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Base class for every input / precondition failure. The CLI maps these to
// exit code 2.
class SpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SchemaError : public SpaceError {
 public:
  using SpaceError::SpaceError;
};

class AxiomViolationError : public SpaceError {
 public:
  AxiomViolationError(Axiom axiom, std::vector<int> witness, std::string what);
  Axiom axiom;
  std::vector<int> witness;  // point indices of the offending tuple
};

class MetricViolationError : public SpaceError {
 public:
  using SpaceError::SpaceError;
};

class TooFewPointsError : public SpaceError {
 public:
  using SpaceError::SpaceError;
};

class InvalidCoefficientsError : public SpaceError {
 public:
  using SpaceError::SpaceError;
};

class UnknownLabelError : public SpaceError {
 public:
  using SpaceError::SpaceError;
};

// ---------------------------------------------------------------------------
// Spaces and maps
// ---------------------------------------------------------------------------

// Labeled point set with a square table of pairwise distances.
class FiniteMetricSpace {
 public:
  // `dist` is row-major n*n. Labels must be unique and non-empty.
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> dist);

  int size() const { return static_cast<int>(labels_.size()); }
  double operator()(int x, int y) const { return d_[flat(x, y)]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  PointId point(int i) const { return {i, labels_[i]}; }
  std::optional<int> find(std::string_view label) const;
  const std::vector<double>& table() const { return d_; }

 private:
  std::size_t flat(int x, int y) const {
    return static_cast<std::size_t>(x) * labels_.size() + y;
  }
  std::vector<std::string> labels_;
  std::vector<double> d_;
};

enum class Provenance { RawTensor, SumFromMetric, MaxFromMetric };
const char* provenance_name(Provenance p);

// Labeled point set with the full ordered ternary table of G-values.
// A space starts out unvalidated; validate_space (or the construction
// helpers in gmetric) produce the validated form every checker requires.
class FiniteGSpace {
 public:
  // `tensor` is row-major n^3: entry (x,y,z) at ((x*n)+y)*n+z.
  // Rejects empty point lists, duplicate labels, size mismatches and
  // entries below -eps.
  static FiniteGSpace unvalidated(std::vector<std::string> labels,
                                  std::vector<double> tensor,
                                  Provenance provenance,
                                  double eps = kDefaultEpsilon);

  int size() const { return static_cast<int>(labels_.size()); }
  double operator()(int x, int y, int z) const { return g_[flat(x, y, z)]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  PointId point(int i) const { return {i, labels_[i]}; }
  std::optional<int> find(std::string_view label) const;
  const std::vector<double>& table() const { return g_; }
  Provenance provenance() const { return provenance_; }
  bool validated() const { return validated_; }

  std::size_t flat(int x, int y, int z) const {
    const auto n = labels_.size();
    return (static_cast<std::size_t>(x) * n + y) * n + z;
  }

 private:
  FiniteGSpace() = default;
  friend FiniteGSpace validate_space(FiniteGSpace raw, double eps, Exec exec);
  friend FiniteGSpace g_from_metric_sum(const FiniteMetricSpace&, double, Exec);
  friend FiniteGSpace g_from_metric_max(const FiniteMetricSpace&, double, Exec);

  std::vector<std::string> labels_;
  std::vector<double> g_;
  Provenance provenance_ = Provenance::RawTensor;
  bool validated_ = false;
};

// Total self-map of a point set, stored as an image table over indices.
class SelfMap {
 public:
  SelfMap(std::vector<int> image, int point_count);

  int operator()(int x) const { return image_[x]; }
  int size() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> image_;
};

// Checks the full axiom set (gmetric::verify_axioms) on a raw space and
// returns it tagged validated. Throws AxiomViolationError carrying the first
// failed axiom (in P1..P5 order) and its witness tuple.
FiniteGSpace validate_space(FiniteGSpace raw, double eps = kDefaultEpsilon,
                            Exec exec = Exec::Parallel);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct ConditionOneReport {
  bool holds = false;
  std::optional<PointId> witness;  // a point x with Tx != x and T(Tx) == x
};

// Half-open interval of admissible contraction constants. lo_open marks the
// degenerate case where the infimum 0 itself is excluded.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool empty = true;
};

std::string to_string(const Interval& iv);

// Verdict for a condition-(II) style inequality. Covers both modes:
//  - tight mode: tight_constant holds the supremum ratio lambda*, the verdict
//    is satisfiable iff lambda* < bound - eps, and `admissible` is the
//    interval of workable constants;
//  - fixed mode (given coefficients): tight_constant is empty and `holds`
//    reports the inequality verdict at those coefficients.
// `witness` is the lexicographically smallest triple attaining the supremum
// (tight mode), the worst-violation triple (fixed mode), or the infeasibility
// certificate when `infeasible` is set.
struct ConditionTwoReport {
  bool holds = false;
  bool infeasible = false;
  std::optional<double> tight_constant;
  double bound = 0.0;
  Interval admissible;
  std::array<int, 3> witness{-1, -1, -1};
  double witness_lhs = 0.0;
  double witness_rhs = 0.0;

  bool has_witness() const { return witness[0] >= 0; }
};

struct ConditionReport {
  ConditionOneReport condition_one;
  ConditionTwoReport condition_two;
};

// Picard orbit plus diagnostics.
struct IterationTrace {
  enum class Status { FixedPointReached, CycleDetected, StepLimit };

  std::vector<PointId> orbit;
  Status status = Status::StepLimit;
  // G(u_n, u_{n+1}, u_{n+2}) for every n with n+2 inside the orbit.
  std::vector<double> triple_values;
  int cycle_start = -1;  // index into orbit, set when a cycle is detected
  int cycle_length = 0;
};

const char* status_name(IterationTrace::Status s);

}  // namespace gfix
