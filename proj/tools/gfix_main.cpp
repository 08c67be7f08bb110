// gfix — batch verifier for finite G-metric spaces: axiom checking, tight
// contraction constants, Picard iteration and worked-example reproduction.
//
// Exit codes: 0 success with satisfied verdicts, 1 verdict failure,
// 2 input error.
#include <charconv>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfix/conditions.hpp"
#include "gfix/corollaries.hpp"
#include "gfix/gmetric.hpp"
#include "gfix/ingest.hpp"
#include "gfix/solver.hpp"

using namespace gfix;
using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct CommonOpts {
  std::string format = "text";
  double epsilon = kDefaultEpsilon;
  bool json_output() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--epsilon", opts.epsilon, "absolute comparison tolerance")
      ->check(CLI::PositiveNumber);
}

std::string label_of(const FiniteGSpace& space, int index) {
  return index >= 0 ? space.label(index) : std::string("?");
}

json witness_labels(const FiniteGSpace& space, const std::array<int, 3>& w) {
  json out = json::array();
  for (int idx : w)
    if (idx >= 0) out.push_back(space.label(idx));
  return out;
}

json interval_json(const Interval& iv) {
  if (iv.empty) return {{"empty", true}};
  return {{"empty", false},
          {"lo", iv.lo},
          {"hi", iv.hi},
          {"lo_open", iv.lo_open},
          {"hi_open", true},
          {"display", to_string(iv)}};
}

json condition_two_json(const ConditionTwoReport& r, const FiniteGSpace& space) {
  json out;
  out["holds"] = r.holds;
  out["infeasible"] = r.infeasible;
  out["bound"] = r.bound;
  if (r.tight_constant) out["tight_lambda"] = *r.tight_constant;
  out["admissible_interval"] = interval_json(r.admissible);
  if (r.has_witness()) {
    out["witness"] = {{"triple", witness_labels(space, r.witness)},
                      {"lhs", r.witness_lhs},
                      {"rhs", r.witness_rhs}};
  }
  return out;
}

json condition_one_json(const ConditionOneReport& r) {
  json out;
  out["holds"] = r.holds;
  if (r.witness) out["witness"] = r.witness->label;
  return out;
}

void print_condition_two(const ConditionTwoReport& r, const FiniteGSpace& space,
                         const char* what) {
  if (r.infeasible) {
    std::cout << what << ": infeasible (witness (" << label_of(space, r.witness[0])
              << ", " << label_of(space, r.witness[1]) << ", "
              << label_of(space, r.witness[2]) << ") has zero right side)\n";
    return;
  }
  if (r.tight_constant)
    std::cout << what << ": tight lambda* = " << fmt(*r.tight_constant)
              << " against bound " << fmt(r.bound) << ", "
              << (r.holds ? "satisfiable" : "not satisfiable")
              << (r.admissible.empty
                      ? std::string()
                      : ", admissible " + to_string(r.admissible))
              << "\n";
  else
    std::cout << what << ": " << (r.holds ? "holds" : "violated") << "\n";
  if (r.has_witness())
    std::cout << "  witness triple (" << label_of(space, r.witness[0]) << ", "
              << label_of(space, r.witness[1]) << ", "
              << label_of(space, r.witness[2]) << ")  lhs "
              << fmt(r.witness_lhs) << "  rhs " << fmt(r.witness_rhs) << "\n";
}

SelfMap require_map(const Ingested& in) {
  if (!in.map) throw SchemaError("document does not declare a map");
  return *in.map;
}

// ---------------------------------------------------------------------------
// Subcommand implementations; each returns the process exit code.
// ---------------------------------------------------------------------------

int run_check_axioms(const std::string& file, const CommonOpts& opts) {
  const auto in = ingest(file, opts.epsilon, Exec::Parallel, /*validate=*/false);
  const auto verdicts = verify_axioms(in.space, opts.epsilon);
  bool all = true;
  json jv = json::array();
  for (const auto& v : verdicts) {
    all = all && v.holds;
    json one = {{"axiom", axiom_name(v.axiom)}, {"holds", v.holds}};
    if (!v.holds) {
      json w = json::array();
      for (int idx : v.witness) w.push_back(in.space.label(idx));
      one["witness"] = w;
      one["lhs"] = v.lhs;
      one["rhs"] = v.rhs;
    }
    jv.push_back(one);
  }
  const json out = {{"command", "check-axioms"},
                    {"file", file},
                    {"epsilon", opts.epsilon},
                    {"points", in.space.size()},
                    {"provenance", provenance_name(in.space.provenance())},
                    {"axioms", jv},
                    {"all_hold", all}};
  if (opts.json_output()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "space: " << in.space.size() << " points ("
              << provenance_name(in.space.provenance()) << "), epsilon "
              << fmt(opts.epsilon) << "\n";
    for (const auto& v : verdicts) {
      std::cout << axiom_name(v.axiom) << ": " << (v.holds ? "ok" : "VIOLATED");
      if (!v.holds) {
        std::cout << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
          std::cout << (i ? ", " : "") << in.space.label(v.witness[i]);
        std::cout << ")";
      }
      std::cout << "\n";
    }
    std::cout << (all ? "all axioms hold" : "axiom check failed") << "\n";
  }
  return all ? 0 : 1;
}

struct TheoremArgs {
  std::string theorem;
  std::vector<double> coeffs;
  double lambda = -1.0;
  bool has_lambda() const { return lambda >= 0.0; }
};

TheoremKind parse_theorem(const std::string& name) {
  if (name == "banach") return TheoremKind::Banach;
  if (name == "kannan") return TheoremKind::Kannan;
  if (name == "reich") return TheoremKind::Reich;
  throw SchemaError("unknown theorem '" + name + "'");
}

ReichCoefficients coeffs_of(const TheoremArgs& args) {
  if (args.coeffs.size() != 4)
    throw InvalidCoefficientsError("--coeffs expects a1,a2,a3,a4");
  return {args.coeffs[0], args.coeffs[1], args.coeffs[2], args.coeffs[3]};
}

// Condition (II) evaluation shared by `check` and `tight-lambda`.
ConditionTwoReport condition_two_for(const FiniteGSpace& space,
                                     const SelfMap& map,
                                     const TheoremArgs& args, double eps) {
  const TheoremKind kind = parse_theorem(args.theorem);
  switch (kind) {
    case TheoremKind::Banach:
      return args.has_lambda() ? banach_check(space, map, args.lambda, eps)
                               : banach_tight_lambda(space, map, eps);
    case TheoremKind::Kannan:
      return args.has_lambda() ? kannan_check(space, map, args.lambda, eps)
                               : kannan_tight_lambda(space, map, eps);
    case TheoremKind::Reich:
      if (!args.coeffs.empty())
        return reich_check(space, map, coeffs_of(args), eps);
      if (args.has_lambda())
        return reich_check(space, map, ReichCoefficients::uniform(args.lambda),
                           eps);
      return reich_uniform_tight_lambda(space, map, eps);
  }
  throw SchemaError("unreachable");
}

int run_check(const std::string& file, const TheoremArgs& args,
              const CommonOpts& opts) {
  const auto in = ingest(file, opts.epsilon);
  const auto map = require_map(in);
  const auto one = check_condition_one(in.space, map);
  const auto two = condition_two_for(in.space, map, args, opts.epsilon);

  const json out = {{"command", "check"},
                    {"file", file},
                    {"epsilon", opts.epsilon},
                    {"theorem", args.theorem},
                    {"condition_one", condition_one_json(one)},
                    {"condition_two", condition_two_json(two, in.space)},
                    {"both_hold", one.holds && two.holds}};
  if (opts.json_output()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "theorem: " << args.theorem << "\n";
    std::cout << "condition (I): " << (one.holds ? "holds" : "fails");
    if (one.witness) std::cout << " at " << one.witness->label;
    std::cout << "\n";
    print_condition_two(two, in.space, "condition (II)");
  }
  return one.holds && two.holds ? 0 : 1;
}

int run_tight_lambda(const std::string& file, const TheoremArgs& args,
                     const CommonOpts& opts) {
  const auto in = ingest(file, opts.epsilon);
  const auto map = require_map(in);
  TheoremArgs tight = args;
  tight.lambda = -1.0;
  tight.coeffs.clear();
  const auto two = condition_two_for(in.space, map, tight, opts.epsilon);

  const json out = {{"command", "tight-lambda"},
                    {"file", file},
                    {"epsilon", opts.epsilon},
                    {"theorem", args.theorem},
                    {"report", condition_two_json(two, in.space)}};
  if (opts.json_output()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "theorem: " << args.theorem << "\n";
    print_condition_two(two, in.space, "condition (II)");
  }
  return two.holds ? 0 : 1;
}

int run_fixed_points(const std::string& file, const CommonOpts& opts) {
  const auto in = ingest(file, opts.epsilon);
  const auto map = require_map(in);
  const auto fixed = enumerate_fixed_points(in.space, map);
  json names = json::array();
  for (const auto& p : fixed) names.push_back(p.label);
  const json out = {{"command", "fixed-points"},
                    {"file", file},
                    {"count", fixed.size()},
                    {"fixed_points", names}};
  if (opts.json_output()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "fixed points (" << fixed.size() << "): {";
    for (std::size_t i = 0; i < fixed.size(); ++i)
      std::cout << (i ? ", " : "") << fixed[i].label;
    std::cout << "}\n";
  }
  return 0;
}

int run_iterate(const std::string& file, const std::string& start,
                int max_steps, const CommonOpts& opts) {
  const auto in = ingest(file, opts.epsilon);
  const auto map = require_map(in);
  const auto index = in.space.find(start);
  if (!index) throw UnknownLabelError("unknown start label '" + start + "'");
  const auto trace = picard_iterate(in.space, map, *index, max_steps);
  const bool converged = is_g_cauchy_tail(in.space, trace, 1e-6);

  json orbit = json::array();
  for (const auto& p : trace.orbit) orbit.push_back(p.label);
  json out = {{"command", "iterate"},
              {"file", file},
              {"start", start},
              {"orbit", orbit},
              {"status", status_name(trace.status)},
              {"triple_values", trace.triple_values},
              {"g_cauchy_tail", converged}};
  if (trace.status == IterationTrace::Status::CycleDetected) {
    out["cycle_start"] = trace.cycle_start;
    out["cycle_length"] = trace.cycle_length;
  }
  if (opts.json_output()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "orbit:";
    for (const auto& p : trace.orbit) std::cout << " " << p.label;
    std::cout << "\nstatus: " << status_name(trace.status) << "\n";
    if (trace.status == IterationTrace::Status::CycleDetected)
      std::cout << "cycle: starts at position " << trace.cycle_start
                << ", length " << trace.cycle_length << "\n";
    if (!trace.triple_values.empty()) {
      std::cout << "triple values:";
      for (double v : trace.triple_values) std::cout << " " << fmt(v);
      std::cout << "\n";
    }
    std::cout << "G-Cauchy tail: " << (converged ? "yes" : "no") << "\n";
  }
  return trace.status == IterationTrace::Status::FixedPointReached ? 0 : 1;
}

int run_derive(const std::string& file, const std::string& construction,
               const std::string& output, const CommonOpts& opts) {
  const auto doc = load_document(file);
  SpaceDocument derived;
  if (construction == "delta") {
    const auto in = ingest_document(doc, opts.epsilon);
    derived = matrix_document(delta_metric(in.space), Construction::Max,
                              doc.map_targets);
  } else {
    const auto m = metric_from_document(doc, opts.epsilon);
    const auto space = construction == "sum" ? g_from_metric_sum(m, opts.epsilon)
                                             : g_from_metric_max(m, opts.epsilon);
    derived = tensor_document(space, doc.map_targets);
  }
  const json out = document_to_json(derived);
  if (output.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream os(output);
    if (!os) throw SpaceError("cannot write '" + output + "'");
    os << out.dump(2) << "\n";
  }
  return 0;
}

int run_verify(const std::string& file, const TheoremArgs& args,
               const CommonOpts& opts) {
  const auto in = ingest(file, opts.epsilon);
  const auto map = require_map(in);
  const TheoremKind kind = parse_theorem(args.theorem);
  ContractionKind contraction{kind, std::nullopt};
  if (kind == TheoremKind::Reich) {
    if (!args.coeffs.empty())
      contraction.coefficients = coeffs_of(args);
    else if (args.has_lambda())
      contraction.coefficients = ReichCoefficients::uniform(args.lambda);
  } else if (!args.coeffs.empty() || args.has_lambda()) {
    throw SchemaError("--coeffs/--lambda apply to --theorem reich only; "
                      "use `check` for fixed-constant verdicts");
  }
  const auto verdict =
      verify_theorem_conclusion(in.space, map, contraction, opts.epsilon);

  json fixed = json::array();
  for (const auto& p : verdict.fixed_points) fixed.push_back(p.label);
  json orbits = json::array();
  for (const auto& check : verdict.orbits) {
    json orbit = json::array();
    for (const auto& p : check.trace.orbit) orbit.push_back(p.label);
    orbits.push_back({{"start", check.trace.orbit.front().label},
                      {"orbit", orbit},
                      {"status", status_name(check.trace.status)},
                      {"reached_fixed_point", check.reached_fixed_point},
                      {"triple_values", check.trace.triple_values},
                      {"decay_within_tight", check.decay_within_tight},
                      {"decay_within_proof", check.decay_within_proof}});
  }
  json out = {{"command", "verify"},
              {"file", file},
              {"epsilon", opts.epsilon},
              {"theorem", args.theorem},
              {"condition_one", condition_one_json(verdict.condition_one)},
              {"condition_two", condition_two_json(verdict.condition_two, in.space)},
              {"hypotheses_hold", verdict.hypotheses_hold},
              {"fixed_points", fixed},
              {"orbits", orbits}};
  if (verdict.proof_decay_rate) out["proof_decay_rate"] = *verdict.proof_decay_rate;
  if (verdict.conclusion_verified)
    out["conclusion_verified"] = *verdict.conclusion_verified;

  const bool ok = verdict.hypotheses_hold && verdict.conclusion_verified &&
                  *verdict.conclusion_verified;
  if (opts.json_output()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "theorem: " << args.theorem << "\n";
    std::cout << "condition (I): "
              << (verdict.condition_one.holds ? "holds" : "fails");
    if (verdict.condition_one.witness)
      std::cout << " at " << verdict.condition_one.witness->label;
    std::cout << "\n";
    print_condition_two(verdict.condition_two, in.space, "condition (II)");
    std::cout << "fixed points: {";
    for (std::size_t i = 0; i < verdict.fixed_points.size(); ++i)
      std::cout << (i ? ", " : "") << verdict.fixed_points[i].label;
    std::cout << "}\n";
    if (verdict.proof_decay_rate)
      std::cout << "orbit decay rate: " << fmt(*verdict.proof_decay_rate) << "\n";
    for (const auto& check : verdict.orbits) {
      std::cout << "orbit from " << check.trace.orbit.front().label << ":";
      for (const auto& p : check.trace.orbit) std::cout << " " << p.label;
      std::cout << " (" << status_name(check.trace.status) << ")\n";
    }
    if (!verdict.hypotheses_hold)
      std::cout << "hypotheses fail: no conclusion asserted (observed |Fix| = "
                << verdict.fixed_points.size() << ")\n";
    else
      std::cout << "conclusion (1 <= |Fix| <= 2, all orbits converge): "
                << (ok ? "verified" : "FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// reproduce: rebuild the worked examples from raw coordinates.
// ---------------------------------------------------------------------------

json reproduce_three_point(const FiniteMetricSpace& metric, const SelfMap& t1,
                           const SelfMap& t2, TheoremKind kind, double eps) {
  const auto space = g_from_metric_max(metric, eps);
  const auto labels = space.labels();
  json out;
  out["points"] = labels;
  json dist;
  for (int x = 0; x < metric.size(); ++x)
    for (int y = x + 1; y < metric.size(); ++y)
      dist[labels[x] + "-" + labels[y]] = metric(x, y);
  out["distances"] = dist;
  out["g_of_triple"] = space(0, 1, 2);

  const auto describe = [&](const SelfMap& map) {
    json j;
    const auto one = check_condition_one(space, map);
    j["condition_one"] = condition_one_json(one);
    const auto two = kind == TheoremKind::Banach
                         ? banach_tight_lambda(space, map, eps)
                         : kannan_tight_lambda(space, map, eps);
    j["condition_two"] = condition_two_json(two, space);
    json fixed = json::array();
    for (const auto& p : enumerate_fixed_points(space, map))
      fixed.push_back(p.label);
    j["fixed_points"] = fixed;
    const auto trace = picard_iterate(space, map, metric.size() - 1);
    json orbit = json::array();
    for (const auto& p : trace.orbit) orbit.push_back(p.label);
    j["orbit_from_last_point"] = {{"orbit", orbit},
                                  {"status", status_name(trace.status)}};
    return j;
  };
  out["t1"] = describe(t1);
  out["t2"] = describe(t2);
  return out;
}

void print_three_point(const json& r, const char* theorem) {
  std::cout << "points:";
  for (const auto& p : r["points"]) std::cout << " " << p.get<std::string>();
  std::cout << "\ndistances:";
  for (const auto& [pair, v] : r["distances"].items())
    std::cout << "  " << pair << " = " << fmt(v.get<double>());
  std::cout << "\nG over the point triple = " << fmt(r["g_of_triple"].get<double>())
            << "\n";
  for (const char* name : {"t1", "t2"}) {
    const auto& t = r[name];
    std::cout << (name[1] == '1' ? "T1" : "T2") << ": condition (I) "
              << (t["condition_one"]["holds"].get<bool>() ? "holds" : "fails");
    if (t["condition_one"].contains("witness"))
      std::cout << " at " << t["condition_one"]["witness"].get<std::string>();
    const auto& two = t["condition_two"];
    std::cout << "; " << theorem
              << " tight lambda* = " << fmt(two["tight_lambda"].get<double>());
    if (!two["admissible_interval"]["empty"].get<bool>())
      std::cout << ", admissible "
                << two["admissible_interval"]["display"].get<std::string>();
    std::cout << "\n    Fix = {";
    bool first = true;
    for (const auto& p : t["fixed_points"]) {
      std::cout << (first ? "" : ", ") << p.get<std::string>();
      first = false;
    }
    std::cout << "}; orbit from last point:";
    for (const auto& p : t["orbit_from_last_point"]["orbit"])
      std::cout << " " << p.get<std::string>();
    std::cout << " (" << t["orbit_from_last_point"]["status"].get<std::string>()
              << ")\n";
  }
}

int run_reproduce(const std::string& example, double lambda,
                  const CommonOpts& opts) {
  json out = {{"command", "reproduce"}, {"example", example}};
  if (example == "3.3") {
    const auto metric = euclidean_metric(
        {{"A", {7.0 / 8.0, std::sqrt(15.0) / 8.0}}, {"B", {1.0, 0.0}},
         {"C", {0.0, 0.0}}},
        opts.epsilon);
    out["result"] = reproduce_three_point(metric, SelfMap({0, 1, 0}, 3),
                                          SelfMap({1, 0, 0}, 3),
                                          TheoremKind::Banach, opts.epsilon);
    if (opts.json_output())
      std::cout << out.dump(2) << "\n";
    else
      print_three_point(out["result"], "banach");
    return 0;
  }
  if (example == "3.5") {
    const auto metric = euclidean_metric(
        {{"a", {0.0}}, {"b", {0.2}}, {"c", {1.0}}}, opts.epsilon);
    out["result"] = reproduce_three_point(metric, SelfMap({0, 1, 0}, 3),
                                          SelfMap({1, 0, 0}, 3),
                                          TheoremKind::Kannan, opts.epsilon);
    if (opts.json_output())
      std::cout << out.dump(2) << "\n";
    else
      print_three_point(out["result"], "kannan");
    return 0;
  }
  if (example == "reich") {
    if (!(lambda > 0.0 && lambda < 0.25))
      throw InvalidCoefficientsError(
          "the reich family needs --lambda in (0, 1/4)");
    const double b = 2.0 * lambda / (2.0 * lambda - 1.0);
    const auto metric = euclidean_metric(
        {{"a", {0.0}}, {"b", {b}}, {"c", {1.0}}, {"d", {2.0}}}, opts.epsilon);
    const auto space = g_from_metric_max(metric, opts.epsilon);
    const SelfMap map({0, 1, 1, 1}, 4);
    const auto coeffs = ReichCoefficients::uniform(lambda);

    json r;
    r["lambda"] = lambda;
    r["b"] = b;
    r["condition_one"] = condition_one_json(check_condition_one(space, map));
    json cases = json::array();
    const int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (const auto& t : triples) {
      const auto e = eval_reich(space, map, coeffs, t[0], t[1], t[2]);
      cases.push_back({{"triple", witness_labels(space, {t[0], t[1], t[2]})},
                       {"lhs", e.lhs},
                       {"rhs", e.rhs},
                       {"relation", std::fabs(e.lhs - e.rhs) <= opts.epsilon
                                        ? "equality"
                                        : "strict"}});
    }
    r["cases"] = cases;
    r["reich_holds"] =
        reich_check(space, map, coeffs, opts.epsilon).holds;
    r["uniform_tight"] = condition_two_json(
        reich_uniform_tight_lambda(space, map, opts.epsilon), space);
    json fixed = json::array();
    for (const auto& p : enumerate_fixed_points(space, map))
      fixed.push_back(p.label);
    r["fixed_points"] = fixed;
    out["result"] = r;

    if (opts.json_output()) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "reich family at lambda = " << fmt(lambda)
                << " (b = " << fmt(b) << ")\n";
      std::cout << "condition (I): "
                << (r["condition_one"]["holds"].get<bool>() ? "holds" : "fails")
                << "\n";
      for (const auto& c : r["cases"]) {
        std::cout << "  case (";
        bool first = true;
        for (const auto& p : c["triple"]) {
          std::cout << (first ? "" : ", ") << p.get<std::string>();
          first = false;
        }
        std::cout << "): lhs " << fmt(c["lhs"].get<double>()) << "  rhs "
                  << fmt(c["rhs"].get<double>()) << "  ("
                  << c["relation"].get<std::string>() << ")\n";
      }
      std::cout << "reich inequality at uniform coefficients: "
                << (r["reich_holds"].get<bool>() ? "holds" : "violated") << "\n";
      std::cout << "uniform tight lambda* = "
                << fmt(r["uniform_tight"]["tight_lambda"].get<double>())
                << " (bound 0.25)\n";
      std::cout << "Fix(T) = {";
      bool first = true;
      for (const auto& p : r["fixed_points"]) {
        std::cout << (first ? "" : ", ") << p.get<std::string>();
        first = false;
      }
      std::cout << "}\n";
    }
    return 0;
  }
  throw SchemaError("unknown example '" + example + "' (use 3.3, 3.5 or reich)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite G-metric space verifier and fixed-point solver"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string file, start, construction, output, example;
  TheoremArgs targs;
  int max_steps = 0;
  double reproduce_lambda = 0.125;

  auto* axioms = app.add_subcommand("check-axioms", "verify axioms P1-P5");
  axioms->add_option("file", file, "space document")->required();
  add_common(axioms, opts);

  const auto add_theorem = [&](CLI::App* cmd, bool with_constants) {
    cmd->add_option("--theorem", targs.theorem, "banach | kannan | reich")
        ->required()
        ->check(CLI::IsMember({"banach", "kannan", "reich"}));
    if (with_constants) {
      cmd->add_option("--coeffs", targs.coeffs,
                      "reich coefficients a1,a2,a3,a4")
          ->delimiter(',')
          ->expected(4);
      cmd->add_option("--lambda", targs.lambda, "fixed contraction constant");
    }
  };

  auto* check = app.add_subcommand("check", "check conditions (I) and (II)");
  check->add_option("file", file, "space document")->required();
  add_theorem(check, true);
  add_common(check, opts);

  auto* tight = app.add_subcommand("tight-lambda",
                                   "compute the tight contraction constant");
  tight->add_option("file", file, "space document")->required();
  add_theorem(tight, false);
  add_common(tight, opts);

  auto* fixed = app.add_subcommand("fixed-points", "enumerate fixed points");
  fixed->add_option("file", file, "space document")->required();
  add_common(fixed, opts);

  auto* iterate = app.add_subcommand("iterate", "run Picard iteration");
  iterate->add_option("file", file, "space document")->required();
  iterate->add_option("--start", start, "start point label")->required();
  iterate->add_option("--max-steps", max_steps, "step limit (default |X|+1)");
  add_common(iterate, opts);

  auto* derive = app.add_subcommand("derive", "emit a derived space document");
  derive->add_option("file", file, "space document")->required();
  derive->add_option("--construction", construction, "sum | max | delta")
      ->required()
      ->check(CLI::IsMember({"sum", "max", "delta"}));
  derive->add_option("--output,-o", output, "output path (default stdout)");
  add_common(derive, opts);

  auto* verify = app.add_subcommand("verify",
                                    "verify the full theorem conclusion");
  verify->add_option("file", file, "space document")->required();
  add_theorem(verify, true);
  add_common(verify, opts);

  auto* reproduce =
      app.add_subcommand("reproduce", "recompute a worked example");
  reproduce->add_option("--example", example, "3.3 | 3.5 | reich")->required();
  reproduce->add_option("--lambda", reproduce_lambda,
                        "family parameter for --example reich");
  add_common(reproduce, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (axioms->parsed()) return run_check_axioms(file, opts);
    if (check->parsed()) return run_check(file, targs, opts);
    if (tight->parsed()) return run_tight_lambda(file, targs, opts);
    if (fixed->parsed()) return run_fixed_points(file, opts);
    if (iterate->parsed()) return run_iterate(file, start, max_steps, opts);
    if (derive->parsed()) return run_derive(file, construction, output, opts);
    if (verify->parsed()) return run_verify(file, targs, opts);
    if (reproduce->parsed())
      return run_reproduce(example, reproduce_lambda, opts);
  } catch (const SpaceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
