// Copyright 2026 The msls Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "msls/cli.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "msls/diag.h"
#include "msls/gen.h"
#include "msls/io.h"
#include "msls/metric.h"
#include "msls/search.h"
#include "msls/verify.h"

namespace msls {
namespace {

// Lemma bundles above this size take minutes; analyze skips them.
constexpr int kAnalyzeLemmaLimit = 12;
constexpr int kOptLimit = 20;

struct Flags {
  uint64_t seed = 0;
  int samples = 20;
  double tolerance = 1e-9;
  int n_max = kDefaultExhaustiveLimit;
  std::string out;
  bool timings = false;
  std::string input;

  double epsilon = 0.1;
  std::string pivot = "first";
  bool with_opt = false;
  std::string format = "json";
  int64_t max_iterations = 1'000'000;

  std::string suite;
  std::vector<int> sizes;
  int count = 10;

  GenParams gen;
};

// Property failures after a complete report; mapped to exit code 4.
struct Outcome {
  std::string text;
  bool property_failed = false;
};

Tolerance MakeTolerance(const Flags& f) {
  Tolerance tol;
  tol.rel = f.tolerance;
  return tol;
}

void ValidateCommon(const Flags& f) {
  if (!(f.tolerance > 0.0) || !std::isfinite(f.tolerance)) {
    throw ValidationError("--tolerance must be a positive finite number");
  }
  if (f.samples < 1) throw ValidationError("--samples must be >= 1");
  if (f.n_max < 1 || f.n_max > kMultilinearLimit) {
    throw ValidationError("--n-max must lie in [1, " +
                          std::to_string(kMultilinearLimit) + "]");
  }
}

Json CommonFlags(const Flags& f) {
  return {{"seed", f.seed},
          {"samples", f.samples},
          {"tolerance", f.tolerance},
          {"n_max", f.n_max}};
}

Instance ReadInstance(const Flags& f, std::istream& in) {
  std::string text;
  if (f.input.empty() || f.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(f.input, std::ios::binary);
    if (!file) throw ValidationError("cannot read instance '" + f.input + "'");
    text.assign(std::istreambuf_iterator<char>(file),
                std::istreambuf_iterator<char>());
  }
  return ParseInstanceText(text);
}

Json Report(const std::string& command, const std::string& digest,
            Json flags, Json results) {
  return {{"schema_version", kReportSchemaVersion},
          {"command", command},
          {"inputs_digest", digest},
          {"flags", std::move(flags)},
          {"results", std::move(results)}};
}

Json Triple(const std::array<int, 3>& t) {
  if (t[0] < 0) return nullptr;
  return Json::array({t[0], t[1], t[2]});
}

Json CheckToJson(const PropertyCheck& c, bool with_k) {
  Json j = {{"holds", c.holds}};
  if (!c.holds) {
    Json w = {{"set", MaskToJson(c.set)}, {"i", c.i}, {"value", c.value}};
    if (c.j >= 0) w["j"] = c.j;
    if (with_k && c.k >= 0) w["k"] = c.k;
    j["witness"] = w;
  }
  return j;
}

Json GammaToJson(const GammaReport& g) {
  Json j = {{"gamma", g.infinite ? Json(nullptr) : Json(g.gamma)},
            {"infinite", g.infinite},
            {"vacuous", g.vacuous},
            {"zero_denominator_count", g.zero_denominator_count}};
  if (g.witness_i >= 0) {
    j["witness"] = {{"set", MaskToJson(g.witness_set)},
                    {"i", g.witness_i},
                    {"j", g.witness_j},
                    {"lhs", g.witness_lhs},
                    {"rhs", g.witness_rhs}};
  }
  return j;
}

Json ClassificationToJson(const ClassificationReport& c) {
  return {{"monotone", CheckToJson(c.monotone, false)},
          {"submodular", CheckToJson(c.submodular, false)},
          {"supermodular", CheckToJson(c.supermodular, false)},
          {"second_order_submodular",
           CheckToJson(c.second_order_submodular, true)},
          {"tolerance", c.tolerance}};
}

Json LemmaCheckToJson(const LemmaCheck& c) {
  Json j = {{"name", c.name},
            {"status", std::string(LemmaStatusName(c.status))},
            {"checks", c.checks},
            {"worst_slack", c.worst_slack}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json InstanceSummary(const Instance& inst) {
  const auto c = inst.matroid.min_circuit_size();
  return {{"n", inst.n},
          {"function_kind", std::string(FunctionKindName(inst.function->kind()))},
          {"matroid_kind", std::string(MatroidKindName(inst.matroid.kind()))},
          {"rank", inst.matroid.rank()},
          {"min_circuit", c ? Json(*c) : Json(nullptr)}};
}

void RequireExhaustive(const Instance& inst, const Flags& f,
                       const char* command) {
  if (inst.n > f.n_max) {
    throw GuardError(std::string(command) + ": exhaustive diagnostics need n <= " +
                     std::to_string(f.n_max) + " (got n = " +
                     std::to_string(inst.n) + "); raise --n-max");
  }
}

Outcome CmdGen(const Flags& f) {
  const Instance inst = Generate(f.gen);
  return {SerializeInstance(inst).dump(2) + "\n", false};
}

Outcome CmdAnalyze(const Flags& f, std::istream& in) {
  ValidateCommon(f);
  const Instance inst = ReadInstance(f, in);
  RequireExhaustive(inst, f, "analyze");
  const Tolerance tol = MakeTolerance(f);
  Json results = {{"instance", InstanceSummary(inst)}};
  bool failed = false;

  std::optional<double> measured_sigma;
  if (const DistanceMatrix* d = inst.function->distance()) {
    const SemiMetricReport sm = SemiMetricParameter(*d);
    const NegativeTypeReport nt = IsNegativeType(*d);
    const SqrtMetricReport sq = IsSqrtMetric(*d);
    if (!sm.infinite) measured_sigma = sm.sigma;
    results["metric"] = {
        {"semi_metric", {{"sigma", sm.infinite ? Json(nullptr) : Json(sm.sigma)},
                         {"infinite", sm.infinite},
                         {"witness", Triple(sm.witness)}}},
        {"negative_type", {{"holds", nt.negative_type},
                           {"max_eigenvalue", nt.max_eigenvalue}}},
        {"sqrt_metric", {{"holds", sq.sqrt_metric},
                         {"witness", Triple(sq.witness)},
                         {"worst_excess", sq.worst_excess}}},
        {"metric", IsMetric(*d)}};
  }

  const ValueTable table = ValueTable::Materialize(*inst.function, f.n_max);
  const GammaReport gamma = GammaParameter(table);
  results["gamma"] = GammaToJson(gamma);
  results["classification"] = ClassificationToJson(Classify(table));

  if (inst.n <= kAnalyzeLemmaLimit) {
    LemmaOptions lo;
    lo.n_max = f.n_max;
    lo.seed = f.seed;
    lo.samples = f.samples;
    lo.tolerance = tol;
    const LemmaReport rep = VerifyLemmas(*inst.function, lo);
    Json checks = Json::array();
    for (const LemmaCheck& c : rep.checks) checks.push_back(LemmaCheckToJson(c));
    results["lemmas"] = {{"passed", rep.AllPassed()}, {"checks", checks}};
    failed = !rep.AllPassed();
  } else {
    results["lemmas"] = {
        {"skipped", "lemma checks need n <= " +
                        std::to_string(kAnalyzeLemmaLimit)}};
  }

  Json declared = Json::object();
  const auto compare = [&](const char* key, std::optional<double> measured) {
    if (!inst.metadata.contains(key) || !inst.metadata.at(key).is_number()) {
      return;
    }
    const double want = inst.metadata.at(key).get<double>();
    Json entry = {{"declared", want}};
    if (measured) {
      entry["measured"] = *measured;
      entry["delta"] = *measured - want;
      entry["within_declared"] = tol.Leq(*measured, want);
    } else {
      entry["measured"] = nullptr;
      entry["within_declared"] = false;
    }
    declared[key] = entry;
  };
  compare("declared_sigma", measured_sigma);
  compare("declared_gamma", gamma.infinite ? std::nullopt
                                           : std::optional<double>(gamma.gamma));
  results["declared_vs_measured"] = declared;

  Json flags = CommonFlags(f);
  return {Report("analyze", Digest(SerializeInstance(inst)), flags, results)
                  .dump(2) +
              "\n",
          failed};
}

std::string Csv(const LocalSearchResult& ls) {
  std::string out = "iteration,removed,inserted,value\n";
  char buf[64];
  for (const SwapStep& s : ls.trace) {
    std::snprintf(buf, sizeof(buf), "%.17g", s.value);
    out += std::to_string(s.iteration) + "," + std::to_string(s.removed) + "," +
           std::to_string(s.inserted) + "," + buf + "\n";
  }
  return out;
}

Outcome CmdSolve(const Flags& f, std::istream& in) {
  ValidateCommon(f);
  if (f.format != "json" && f.format != "csv") {
    throw ValidationError("--format must be json or csv");
  }
  const Instance inst = ReadInstance(f, in);
  SolveConfig cfg;
  cfg.epsilon = f.epsilon;
  cfg.pivot = ParsePivotRule(f.pivot);
  cfg.max_iterations = f.max_iterations;
  cfg.seed = f.seed;
  cfg.Validate();
  if (f.with_opt && inst.n > kOptLimit) {
    throw GuardError("solve: --with-opt needs n <= " +
                     std::to_string(kOptLimit));
  }
  const SolveResult res = Solve(*inst.function, inst.matroid, cfg);
  if (f.format == "csv") return {Csv(res.search), false};

  Json trace = Json::array();
  for (const SwapStep& s : res.search.trace) {
    trace.push_back({{"iteration", s.iteration},
                     {"removed", s.removed},
                     {"inserted", s.inserted},
                     {"value", s.value}});
  }
  Json pairs = Json::array();
  for (const auto& [a, b] : res.matching.pairs) pairs.push_back({a, b});
  const bool from_matching = res.chosen != res.search.s;
  Json results = {
      {"instance", InstanceSummary(inst)},
      {"s0", MaskToJson(res.s0)},
      {"local_search", {{"initial", MaskToJson(res.search.initial)},
                        {"set", MaskToJson(res.search.s)},
                        {"value", res.search.value},
                        {"iterations", res.search.trace.size()},
                        {"trace", trace}}},
      {"matching", {{"k", res.matching.k},
                    {"pairs", pairs},
                    {"weight", res.matching.weight},
                    {"set", MaskToJson(res.matching.s_prime)},
                    {"value", res.matching.value}}},
      {"chosen", {{"set", MaskToJson(res.chosen)},
                  {"value", res.chosen_value},
                  {"source", from_matching ? "matching" : "local_search"}}}};

  const int r = inst.matroid.rank();
  if (inst.n <= f.n_max) {
    const ValueTable table = ValueTable::Materialize(*inst.function, f.n_max);
    const GammaReport gamma = GammaParameter(table);
    const ClassificationReport cls = Classify(table);
    Json bounds = {{"gamma", GammaToJson(gamma)}};
    if (!gamma.infinite && cls.monotone.holds && r >= 2) {
      bounds["general_ratio"] =
          GeneralRatioBound(gamma.gamma, r, inst.n, cfg.epsilon);
      bounds["iteration_bound"] =
          IterationBound(gamma.gamma, r, inst.n, cfg.epsilon);
      bounds["tight_iteration_bound"] =
          TightIterationBound(gamma.gamma, r, inst.n, cfg.epsilon);
      if (cls.supermodular.holds && cls.second_order_submodular.holds) {
        bounds["supermodular_ratio"] = SupermodularRatioBound(
            gamma.gamma, r, inst.matroid.min_circuit_size(), inst.n,
            cfg.epsilon);
      }
    } else {
      bounds["note"] =
          "ratio bounds need a monotone gamma-MS function and rank >= 2";
    }
    results["bounds"] = bounds;
  } else {
    results["bounds"] = {{"skipped", "bounds need n <= --n-max"}};
  }

  if (f.with_opt) {
    const OptResult opt = BruteForceOpt(*inst.function, inst.matroid, kOptLimit);
    Json ratio = nullptr;
    if (res.chosen_value > 0.0) {
      ratio = opt.value / res.chosen_value;
    } else if (opt.value <= 0.0) {
      ratio = 1.0;
    }
    results["opt"] = {{"set", MaskToJson(opt.set)},
                      {"value", opt.value},
                      {"ratio", ratio}};
  }

  Json flags = CommonFlags(f);
  flags["epsilon"] = f.epsilon;
  flags["pivot"] = f.pivot;
  flags["max_iterations"] = f.max_iterations;
  flags["with_opt"] = f.with_opt;
  return {Report("solve", Digest(SerializeInstance(inst)), flags, results)
                  .dump(2) +
              "\n",
          false};
}

Json SuiteToJson(const SuiteReport& rep) {
  Json props = Json::array();
  for (const PropertyOutcome& p : rep.properties) {
    Json j = {{"name", p.name},
              {"passed", p.passed()},
              {"checked", p.checked},
              {"failed", p.failed},
              {"skipped", p.skipped},
              {"worst_slack", p.worst_slack}};
    if (!p.witness.empty()) j["witness"] = p.witness;
    props.push_back(j);
  }
  return {{"suite", rep.suite}, {"passed", rep.passed()}, {"properties", props}};
}

Outcome CmdVerify(const Flags& f) {
  ValidateCommon(f);
  VerifyOptions vo;
  vo.sizes = f.sizes;
  vo.count = f.count;
  vo.seed = f.seed;
  vo.samples = f.samples;
  vo.epsilon = f.epsilon;
  vo.tolerance = MakeTolerance(f);
  std::vector<std::string> suites;
  if (f.suite == "all") {
    suites = SuiteNames();
  } else {
    suites = {f.suite};
  }
  Json reports = Json::array();
  bool passed = true;
  for (const std::string& s : suites) {
    const SuiteReport rep = RunSuite(s, vo);
    passed = passed && rep.passed();
    reports.push_back(SuiteToJson(rep));
  }
  Json flags = CommonFlags(f);
  flags["suite"] = f.suite;
  flags["sizes"] = f.sizes;
  flags["count"] = f.count;
  flags["epsilon"] = f.epsilon;
  Json results = {{"passed", passed}, {"suites", reports}};
  return {Report("verify", Digest(flags), flags, results).dump(2) + "\n",
          !passed};
}

void AddCommon(CLI::App* app, Flags& f) {
  app->add_option("--seed", f.seed, "Seed for every random choice");
  app->add_option("--samples", f.samples, "Interior sample points per check");
  app->add_option("--tolerance", f.tolerance, "Relative comparison tolerance");
  app->add_option("--n-max", f.n_max, "Largest n for exhaustive enumeration");
  app->add_option("--out", f.out, "Write the report to PATH");
  app->add_flag("--timings", f.timings, "Add wall-clock timings to reports");
}

void WriteOutput(const Flags& f, const std::string& text, std::ostream& out) {
  if (f.out.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(f.out, std::ios::binary | std::ios::trunc);
  if (!file) throw ValidationError("cannot write '" + f.out + "'");
  file << text;
}

// Splices {"timings": ...} into a JSON report.
std::string AddTimings(const std::string& text, double ms) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("command")) {
    return text;
  }
  doc["timings"] = {{"total_ms", ms}};
  return doc.dump(2) + "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, std::istream& in) {
  Flags f;
  CLI::App app{"Local search for gamma-meta-submodular maximization under "
               "matroid constraints"};
  app.name("msls");
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("gen", "Write a seeded random instance");
  gen->add_option("kind", f.gen.kind, "Generator family")
      ->required()
      ->check(CLI::IsMember(GeneratorKinds()));
  gen->add_option("--n", f.gen.n, "Ground set size")->required();
  gen->add_option("--dim", f.gen.dim, "Point dimension");
  gen->add_option("--power", f.gen.power, "Distance power (semimetric-power)");
  gen->add_option("--support", f.gen.support, "Distribution support (js)");
  gen->add_option("--universe", f.gen.universe, "Universe size (coverage)");
  gen->add_option("--coverage-probability", f.gen.coverage_probability,
                  "Incidence probability (coverage)");
  gen->add_flag("--modular", f.gen.modular, "Add random modular weights");
  gen->add_option("--matroid", f.gen.matroid, "uniform, partition or graphic");
  gen->add_option("--rank", f.gen.rank, "Target rank");
  gen->add_option("--blocks", f.gen.blocks, "Partition block count");
  AddCommon(gen, f);
  gen->get_option("--seed")->required();

  CLI::App* analyze =
      app.add_subcommand("analyze", "Metric, gamma and lemma diagnostics");
  analyze->add_option("instance", f.input, "Instance file, '-' for stdin");
  AddCommon(analyze, f);

  CLI::App* solve = app.add_subcommand("solve", "Run the local search");
  solve->add_option("instance", f.input, "Instance file, '-' for stdin");
  solve->add_option("--epsilon", f.epsilon, "Improvement parameter");
  solve->add_option("--pivot", f.pivot, "first or best")
      ->check(CLI::IsMember({"first", "best"}));
  solve->add_flag("--with-opt", f.with_opt, "Add the exhaustive optimum");
  solve->add_option("--format", f.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--max-iterations", f.max_iterations, "Swap cap");
  AddCommon(solve, f);

  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  std::vector<std::string> suite_choices = SuiteNames();
  suite_choices.push_back("all");
  verify->add_option("suite", f.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--sizes", f.sizes, "Ground set sizes")->delimiter(',');
  verify->add_option("--count", f.count, "Instances per size");
  verify->add_option("--epsilon", f.epsilon, "Improvement parameter");
  AddCommon(verify, f);

  std::vector<const char*> argv = {"msls"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }
  f.gen.seed = f.seed;

  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    if (gen->parsed()) {
      result = CmdGen(f);
    } else if (analyze->parsed()) {
      result = CmdAnalyze(f, in);
    } else if (solve->parsed()) {
      result = CmdSolve(f, in);
    } else {
      result = CmdVerify(f);
    }
    if (f.timings) {
      const std::chrono::duration<double, std::milli> ms =
          std::chrono::steady_clock::now() - start;
      result.text = AddTimings(result.text, ms.count());
    }
    WriteOutput(f, result.text, out);
    return result.property_failed ? kExitPropertyFailure : kExitOk;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace msls
