#include "gfix/core.hpp"

#include <charconv>
#include <cstdio>
#include <unordered_set>

#include "gfix/gmetric.hpp"

namespace gfix {

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::P1: return "P1";
    case Axiom::P2: return "P2";
    case Axiom::P3: return "P3";
    case Axiom::P4: return "P4";
    case Axiom::P5: return "P5";
  }
  return "?";
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::RawTensor: return "raw-tensor";
    case Provenance::SumFromMetric: return "sum-from-metric";
    case Provenance::MaxFromMetric: return "max-from-metric";
  }
  return "?";
}

const char* status_name(IterationTrace::Status s) {
  switch (s) {
    case IterationTrace::Status::FixedPointReached: return "fixed-point-reached";
    case IterationTrace::Status::CycleDetected: return "cycle-detected";
    case IterationTrace::Status::StepLimit: return "step-limit";
  }
  return "?";
}

AxiomViolationError::AxiomViolationError(Axiom axiom_, std::vector<int> witness_,
                                         std::string what_)
    : SpaceError(std::move(what_)), axiom(axiom_), witness(std::move(witness_)) {}

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw SchemaError("point list is empty");
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw SchemaError("empty point label");
    if (!seen.insert(label).second)
      throw SchemaError("duplicate point label '" + label + "'");
  }
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<double> dist)
    : labels_(std::move(labels)), d_(std::move(dist)) {
  check_labels(labels_);
  const auto n = labels_.size();
  if (d_.size() != n * n)
    throw SchemaError("distance table size does not match point count");
}

std::optional<int> FiniteMetricSpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

FiniteGSpace FiniteGSpace::unvalidated(std::vector<std::string> labels,
                                       std::vector<double> tensor,
                                       Provenance provenance, double eps) {
  check_labels(labels);
  const auto n = labels.size();
  if (tensor.size() != n * n * n)
    throw SchemaError("G tensor size does not match point count");
  for (std::size_t i = 0; i < tensor.size(); ++i) {
    if (tensor[i] < -eps) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "negative G entry %.17g at flat index %zu",
                    tensor[i], i);
      throw SchemaError(buf);
    }
  }
  FiniteGSpace space;
  space.labels_ = std::move(labels);
  space.g_ = std::move(tensor);
  space.provenance_ = provenance;
  space.validated_ = false;
  return space;
}

std::optional<int> FiniteGSpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

SelfMap::SelfMap(std::vector<int> image, int point_count)
    : image_(std::move(image)) {
  if (static_cast<int>(image_.size()) != point_count)
    throw SchemaError("map is not total over the declared points");
  for (int target : image_)
    if (target < 0 || target >= point_count)
      throw SchemaError("map target out of range");
}

FiniteGSpace validate_space(FiniteGSpace raw, double eps, Exec exec) {
  const auto verdicts = verify_axioms(raw, eps, exec);
  for (const auto& verdict : verdicts) {
    if (verdict.holds) continue;
    std::string what = std::string("axiom ") + axiom_name(verdict.axiom) +
                       " violated at (";
    for (std::size_t i = 0; i < verdict.witness.size(); ++i) {
      if (i) what += ", ";
      what += raw.label(verdict.witness[i]);
    }
    what += ")";
    throw AxiomViolationError(verdict.axiom, verdict.witness, std::move(what));
  }
  raw.validated_ = true;
  return raw;
}

std::string to_string(const Interval& iv) {
  if (iv.empty) return "empty";
  char buf[96];
  std::array<char, 32> lo{}, hi{};
  auto fmt = [](std::array<char, 32>& out, double v) {
    auto res = std::to_chars(out.data(), out.data() + out.size(), v);
    *res.ptr = '\0';
  };
  fmt(lo, iv.lo);
  fmt(hi, iv.hi);
  std::snprintf(buf, sizeof(buf), "%c%s, %s)", iv.lo_open ? '(' : '[', lo.data(),
                hi.data());
  return buf;
}

}  // namespace gfix
