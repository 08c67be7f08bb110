// Times the enumeration kernels in serial and OpenMP mode on one synthetic
// instance and verifies that both modes return identical results.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "gfix/conditions.hpp"
#include "gfix/gmetric.hpp"

using namespace gfix;

namespace {

FiniteMetricSpace synthetic_metric(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.2, 2.0);
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) d[x * n + y] = d[y * n + x] = dist(rng);
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        d[x * n + y] = std::min(d[x * n + y], d[x * n + k] + d[k * n + y]);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

template <class Fn>
double time_best_of(int reps, const Fn& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto begin = std::chrono::steady_clock::now();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - begin)
                          .count();
    if (ms < best) best = ms;
  }
  return best;
}

void report(const char* kernel, double serial_ms, double parallel_ms,
            bool identical) {
  std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
              kernel, serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int n = 64;
  int reps = 3;
  unsigned seed = 1;
  CLI::App app{"gfix kernel benchmark: serial reference vs OpenMP"};
  app.add_option("--n", n, "number of points")->check(CLI::Range(8, 512));
  app.add_option("--reps", reps, "repetitions (best-of)")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "instance seed");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled (both modes run serially)\n");
#endif
  std::printf("instance: n = %d, sum-form G from a shortest-path metric\n\n", n);

  const auto metric = synthetic_metric(n, seed);
  const auto space = g_from_metric_sum(metric);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = pick(rng);
  const SelfMap map(std::move(image), n);

  bool all_identical = true;

  {
    std::array<AxiomVerdict, 5> serial_out{}, parallel_out{};
    const double s = time_best_of(reps, [&] {
      serial_out = verify_axioms(space, kDefaultEpsilon, Exec::Serial);
    });
    const double p = time_best_of(reps, [&] {
      parallel_out = verify_axioms(space, kDefaultEpsilon, Exec::Parallel);
    });
    bool same = true;
    for (int i = 0; i < 5; ++i)
      same = same && serial_out[i].holds == parallel_out[i].holds &&
             serial_out[i].witness == parallel_out[i].witness;
    all_identical = all_identical && same;
    report("verify_axioms (n^4)", s, p, same);
  }

  const auto compare = [&](const char* name, auto&& run) {
    ConditionTwoReport serial_out, parallel_out;
    const double s = time_best_of(reps, [&] { serial_out = run(Exec::Serial); });
    const double p =
        time_best_of(reps, [&] { parallel_out = run(Exec::Parallel); });
    const bool same = serial_out.holds == parallel_out.holds &&
                      serial_out.tight_constant == parallel_out.tight_constant &&
                      serial_out.witness == parallel_out.witness;
    all_identical = all_identical && same;
    report(name, s, p, same);
  };

  compare("banach tight (n^3/6)", [&](Exec exec) {
    return banach_tight_lambda(space, map, kDefaultEpsilon, exec);
  });
  compare("kannan tight (n^3/6)", [&](Exec exec) {
    return kannan_tight_lambda(space, map, kDefaultEpsilon, exec);
  });
  compare("reich tight (n^3)", [&](Exec exec) {
    return reich_uniform_tight_lambda(space, map, kDefaultEpsilon, exec);
  });

  return all_identical ? 0 : 1;
}
