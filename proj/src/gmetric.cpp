#include "gfix/gmetric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace gfix {

namespace {

constexpr long long kNone = std::numeric_limits<long long>::max();

// Scans [0, count) for the smallest flat index satisfying `violates`.
// The flat index encodes lexicographic tuple order, so the parallel min
// reduction returns the same witness as the serial early-exit loop.
template <class Pred>
long long first_violation(long long count, Exec exec, const Pred& violates) {
  if (exec == Exec::Serial) {
    for (long long t = 0; t < count; ++t)
      if (violates(t)) return t;
    return kNone;
  }
  long long best = kNone;
#pragma omp parallel for reduction(min : best) schedule(static)
  for (long long t = 0; t < count; ++t) {
    if (violates(t) && t < best) best = t;
  }
  return best;
}

struct TupleCodec {
  long long n;
  std::vector<int> triple(long long t) const {
    const int z = static_cast<int>(t % n);
    const int y = static_cast<int>((t / n) % n);
    const int x = static_cast<int>(t / (n * n));
    return {x, y, z};
  }
  std::vector<int> quad(long long t) const {
    const int w = static_cast<int>(t % n);
    const int z = static_cast<int>((t / n) % n);
    const int y = static_cast<int>((t / (n * n)) % n);
    const int x = static_cast<int>(t / (n * n * n));
    return {x, y, z, w};
  }
};

}  // namespace

const char* metric_axiom_name(MetricAxiom axiom) {
  switch (axiom) {
    case MetricAxiom::Identity: return "identity";
    case MetricAxiom::Positivity: return "positivity";
    case MetricAxiom::Symmetry: return "symmetry";
    case MetricAxiom::Triangle: return "triangle";
  }
  return "?";
}

std::array<AxiomVerdict, 5> verify_axioms(const FiniteGSpace& space, double eps,
                                          Exec exec) {
  const long long n = space.size();
  const double* g = space.table().data();
  const TupleCodec codec{n};
  const auto at = [&](int x, int y, int z) {
    return g[(static_cast<long long>(x) * n + y) * n + z];
  };

  std::array<AxiomVerdict, 5> out;

  // P1: G(x,y,z) = 0 iff x = y = z, both directions over all triples.
  {
    const auto flat = first_violation(n * n * n, exec, [&](long long t) {
      const int z = static_cast<int>(t % n);
      const int y = static_cast<int>((t / n) % n);
      const int x = static_cast<int>(t / (n * n));
      const double v = g[t];
      if (x == y && y == z) return std::fabs(v) > eps;
      return v <= eps;
    });
    auto& verdict = out[0];
    verdict.axiom = Axiom::P1;
    verdict.holds = flat == kNone;
    if (!verdict.holds) {
      verdict.witness = codec.triple(flat);
      verdict.lhs = g[flat];
    }
  }

  // P2: x != y implies G(x,x,y) > 0. Scan pairs, report (x,x,y).
  {
    const auto flat = first_violation(n * n, exec, [&](long long t) {
      const int y = static_cast<int>(t % n);
      const int x = static_cast<int>(t / n);
      if (x == y) return false;
      return at(x, x, y) <= eps;
    });
    auto& verdict = out[1];
    verdict.axiom = Axiom::P2;
    verdict.holds = flat == kNone;
    if (!verdict.holds) {
      const int y = static_cast<int>(flat % n);
      const int x = static_cast<int>(flat / n);
      verdict.witness = {x, x, y};
      verdict.lhs = at(x, x, y);
    }
  }

  // P3: every ordered triple must match all 6 of its permutations.
  {
    const auto perm_mismatch = [&](int x, int y, int z) -> double {
      const double v = at(x, y, z);
      const double perms[5] = {at(x, z, y), at(y, x, z), at(y, z, x),
                               at(z, x, y), at(z, y, x)};
      for (double p : perms)
        if (std::fabs(v - p) > eps) return p;
      return v;
    };
    const auto flat = first_violation(n * n * n, exec, [&](long long t) {
      const int z = static_cast<int>(t % n);
      const int y = static_cast<int>((t / n) % n);
      const int x = static_cast<int>(t / (n * n));
      return std::fabs(g[t] - perm_mismatch(x, y, z)) > eps;
    });
    auto& verdict = out[2];
    verdict.axiom = Axiom::P3;
    verdict.holds = flat == kNone;
    if (!verdict.holds) {
      verdict.witness = codec.triple(flat);
      const auto& w = verdict.witness;
      verdict.lhs = g[flat];
      verdict.rhs = perm_mismatch(w[0], w[1], w[2]);
    }
  }

  // P4: y != z implies G(x,x,y) <= G(x,y,z).
  {
    const auto flat = first_violation(n * n * n, exec, [&](long long t) {
      const int z = static_cast<int>(t % n);
      const int y = static_cast<int>((t / n) % n);
      const int x = static_cast<int>(t / (n * n));
      if (y == z) return false;
      return at(x, x, y) > g[t] + eps;
    });
    auto& verdict = out[3];
    verdict.axiom = Axiom::P4;
    verdict.holds = flat == kNone;
    if (!verdict.holds) {
      verdict.witness = codec.triple(flat);
      const auto& w = verdict.witness;
      verdict.lhs = at(w[0], w[0], w[1]);
      verdict.rhs = g[flat];
    }
  }

  // P5: rectangle inequality over all ordered quadruples.
  {
    const auto flat = first_violation(n * n * n * n, exec, [&](long long t) {
      const int w = static_cast<int>(t % n);
      const int z = static_cast<int>((t / n) % n);
      const int y = static_cast<int>((t / (n * n)) % n);
      const int x = static_cast<int>(t / (n * n * n));
      return at(x, y, z) > at(x, w, w) + at(w, y, z) + eps;
    });
    auto& verdict = out[4];
    verdict.axiom = Axiom::P5;
    verdict.holds = flat == kNone;
    if (!verdict.holds) {
      verdict.witness = codec.quad(flat);
      const auto& w = verdict.witness;
      verdict.lhs = at(w[0], w[1], w[2]);
      verdict.rhs = at(w[0], w[3], w[3]) + at(w[3], w[1], w[2]);
    }
  }

  return out;
}

std::array<MetricVerdict, 4> verify_metric_axioms(const FiniteMetricSpace& m,
                                                  double eps, Exec exec) {
  const long long n = m.size();
  const double* d = m.table().data();
  const auto at = [&](int x, int y) { return d[static_cast<long long>(x) * n + y]; };

  std::array<MetricVerdict, 4> out;

  {
    const auto flat = first_violation(n, exec, [&](long long t) {
      return std::fabs(at(static_cast<int>(t), static_cast<int>(t))) > eps;
    });
    out[0] = {MetricAxiom::Identity, flat == kNone, {}};
    if (flat != kNone) out[0].witness = {static_cast<int>(flat), static_cast<int>(flat)};
  }
  {
    const auto flat = first_violation(n * n, exec, [&](long long t) {
      const int y = static_cast<int>(t % n);
      const int x = static_cast<int>(t / n);
      return x != y && at(x, y) <= eps;
    });
    out[1] = {MetricAxiom::Positivity, flat == kNone, {}};
    if (flat != kNone)
      out[1].witness = {static_cast<int>(flat / n), static_cast<int>(flat % n)};
  }
  {
    const auto flat = first_violation(n * n, exec, [&](long long t) {
      const int y = static_cast<int>(t % n);
      const int x = static_cast<int>(t / n);
      return std::fabs(at(x, y) - at(y, x)) > eps;
    });
    out[2] = {MetricAxiom::Symmetry, flat == kNone, {}};
    if (flat != kNone)
      out[2].witness = {static_cast<int>(flat / n), static_cast<int>(flat % n)};
  }
  {
    const auto flat = first_violation(n * n * n, exec, [&](long long t) {
      const int z = static_cast<int>(t % n);
      const int y = static_cast<int>((t / n) % n);
      const int x = static_cast<int>(t / (n * n));
      return at(x, z) > at(x, y) + at(y, z) + eps;
    });
    out[3] = {MetricAxiom::Triangle, flat == kNone, {}};
    if (flat != kNone) {
      const TupleCodec codec{n};
      out[3].witness = codec.triple(flat);
    }
  }
  return out;
}

namespace {

void require_metric(const FiniteMetricSpace& m, double eps, Exec exec) {
  for (const auto& verdict : verify_metric_axioms(m, eps, exec)) {
    if (verdict.holds) continue;
    std::string what = std::string("metric axiom '") +
                       metric_axiom_name(verdict.axiom) + "' violated at (";
    for (std::size_t i = 0; i < verdict.witness.size(); ++i) {
      if (i) what += ", ";
      what += m.label(verdict.witness[i]);
    }
    what += ")";
    throw MetricViolationError(what);
  }
}

template <class Combine>
FiniteGSpace g_from_metric(const FiniteMetricSpace& m, Provenance provenance,
                           double eps, Exec exec, const Combine& combine) {
  require_metric(m, eps, exec);
  const int n = m.size();
  std::vector<double> tensor(static_cast<std::size_t>(n) * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        tensor[(static_cast<std::size_t>(x) * n + y) * n + z] =
            combine(m(x, y), m(y, z), m(x, z));
  return FiniteGSpace::unvalidated(m.labels(), std::move(tensor), provenance,
                                   eps);
}

}  // namespace

FiniteGSpace g_from_metric_sum(const FiniteMetricSpace& m, double eps, Exec exec) {
  auto space = g_from_metric(m, Provenance::SumFromMetric, eps, exec,
                             [](double a, double b, double c) { return a + b + c; });
  space.validated_ = true;  // holds by construction for a valid metric
  return space;
}

FiniteGSpace g_from_metric_max(const FiniteMetricSpace& m, double eps, Exec exec) {
  auto space = g_from_metric(m, Provenance::MaxFromMetric, eps, exec,
                             [](double a, double b, double c) {
                               return std::max(a, std::max(b, c));
                             });
  space.validated_ = true;
  return space;
}

FiniteMetricSpace delta_metric(const FiniteGSpace& space) {
  if (!space.validated())
    throw SpaceError("delta_metric requires a validated space");
  const int n = space.size();
  std::vector<double> d(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      d[static_cast<std::size_t>(x) * n + y] =
          std::max(space(x, y, y), space(y, x, x));
  return FiniteMetricSpace(space.labels(), std::move(d));
}

FiniteMetricSpace euclidean_metric(
    const std::vector<std::pair<std::string, std::vector<double>>>& points,
    double eps) {
  if (points.empty()) throw SchemaError("point list is empty");
  const std::size_t dim = points.front().second.size();
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const auto& [label, coords] : points) {
    if (coords.size() != dim)
      throw SchemaError("coordinate dimension mismatch for point '" + label + "'");
    labels.push_back(label);
  }
  const int n = static_cast<int>(points.size());
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      double sq = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double diff = points[x].second[k] - points[y].second[k];
        sq += diff * diff;
      }
      const double dist = std::sqrt(sq);
      if (dist <= eps)
        throw MetricViolationError("coincident points '" + points[x].first +
                                   "' and '" + points[y].first + "'");
      d[static_cast<std::size_t>(x) * n + y] = dist;
      d[static_cast<std::size_t>(y) * n + x] = dist;
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

bool is_g_cauchy_tail(const FiniteGSpace& space, const IterationTrace& trace,
                      double tol, int window) {
  if (trace.orbit.empty()) throw SpaceError("empty iteration trace");
  window = std::max(1, window);
  const int len = static_cast<int>(trace.orbit.size());

  // The stored orbit drops repeats, so continue it conceptually: a
  // stabilized orbit repeats its terminal fixed point, a cycle wraps around.
  // Step-limited traces have no known continuation and use the raw tail.
  const auto entry = [&](int k) -> int {
    if (k < len) return trace.orbit[k].index;
    switch (trace.status) {
      case IterationTrace::Status::FixedPointReached:
        return trace.orbit.back().index;
      case IterationTrace::Status::CycleDetected:
        return trace
            .orbit[trace.cycle_start +
                   (k - trace.cycle_start) % trace.cycle_length]
            .index;
      case IterationTrace::Status::StepLimit:
        break;
    }
    return trace.orbit.back().index;
  };
  const int total =
      trace.status == IterationTrace::Status::StepLimit ? len : len + window;
  const int begin = std::max(0, total - window);
  for (int i = begin; i < total; ++i)
    for (int j = begin; j < total; ++j)
      if (space(entry(i), entry(j), entry(j)) >= tol) return false;
  return true;
}

}  // namespace gfix
