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

#include "msls/search.h"

#include <cmath>
#include <limits>
#include <string>

#include "msls/diag.h"

namespace msls {

std::string_view PivotRuleName(PivotRule rule) {
  return rule == PivotRule::kFirstImprovement ? "first" : "best";
}

PivotRule ParsePivotRule(std::string_view name) {
  if (name == "first") return PivotRule::kFirstImprovement;
  if (name == "best") return PivotRule::kBestImprovement;
  throw ValidationError("unknown pivot rule '" + std::string(name) +
                        "'; expected first or best");
}

void SolveConfig::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ValidationError("epsilon must be a positive finite number");
  }
  if (max_iterations <= 0) {
    throw ValidationError("max_iterations must be positive");
  }
}

namespace {

void CheckSameGroundSet(const SetFunction& fn, const Matroid& m) {
  if (fn.n() != m.n()) {
    throw ValidationError("function has ground set " + std::to_string(fn.n()) +
                          " but matroid has " + std::to_string(m.n()));
  }
}

double ImprovementFactor(int n, double epsilon) {
  return 1.0 + epsilon / (static_cast<double>(n) * n);
}

}  // namespace

SubsetMask BestPairInit(const SetFunction& fn, const Matroid& m) {
  CheckSameGroundSet(fn, m);
  const int n = fn.n();
  std::optional<SubsetMask> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const SubsetMask pair = SubsetMask::Singleton(i).with(j);
      if (!m.IsIndependent(pair)) continue;
      const double v = fn.Eval(pair);
      if (v > best_value) {
        best_value = v;
        best = pair;
      }
    }
  }
  if (best) return *best;
  for (int i = 0; i < n; ++i) {
    const SubsetMask single = SubsetMask::Singleton(i);
    if (!m.IsIndependent(single)) continue;
    const double v = fn.Eval(single);
    if (v > best_value) {
      best_value = v;
      best = single;
    }
  }
  return best.value_or(SubsetMask());
}

bool IsImprovingSwap(double current, double candidate, double factor) {
  if (current > 0.0) return candidate >= factor * current;
  return candidate > current + kZeroValueThreshold;
}

LocalSearchResult LocalSearchFrom(const SetFunction& fn, const Matroid& m,
                                  SubsetMask start, const SolveConfig& cfg) {
  CheckSameGroundSet(fn, m);
  cfg.Validate();
  if (!m.IsBase(start)) {
    throw PreconditionError("local search must start from a base");
  }
  const int n = fn.n();
  const double factor = ImprovementFactor(n, cfg.epsilon);
  LocalSearchResult result;
  result.initial = start;
  result.s = start;
  result.value = fn.Eval(start);

  for (int64_t iteration = 1;; ++iteration) {
    int best_i = -1;
    int best_j = -1;
    double best_value = 0.0;
    const std::vector<int> inside = result.s.Elements();
    for (int i : inside) {
      const SubsetMask without = result.s.without(i);
      for (int j = 0; j < n; ++j) {
        if (result.s.contains(j)) continue;
        const SubsetMask candidate = without.with(j);
        if (!m.IsIndependent(candidate)) continue;
        const double v = fn.Eval(candidate);
        if (!IsImprovingSwap(result.value, v, factor)) continue;
        if (best_i < 0 || v > best_value) {
          best_i = i;
          best_j = j;
          best_value = v;
        }
        if (cfg.pivot == PivotRule::kFirstImprovement) break;
      }
      if (best_i >= 0 && cfg.pivot == PivotRule::kFirstImprovement) break;
    }
    if (best_i < 0) break;
    if (iteration > cfg.max_iterations) {
      throw IterationLimitError(
          "local search exceeded " + std::to_string(cfg.max_iterations) +
              " swaps; check epsilon and the function's scale",
          std::move(result.trace));
    }
    result.s = result.s.without(best_i).with(best_j);
    result.value = best_value;
    result.trace.push_back({iteration, best_i, best_j, best_value});
  }
  return result;
}

LocalSearchResult LocalSearch(const SetFunction& fn, const Matroid& m,
                              const SolveConfig& cfg) {
  return LocalSearchFrom(fn, m, m.ExtendToBase(BestPairInit(fn, m)), cfg);
}

bool IsApproximateLocalOptimum(const SetFunction& fn, const Matroid& m,
                               SubsetMask s, double epsilon) {
  CheckSameGroundSet(fn, m);
  const int n = fn.n();
  const double factor = ImprovementFactor(n, epsilon);
  const double value = fn.Eval(s);
  for (int i : s.Elements()) {
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      const SubsetMask candidate = s.without(i).with(j);
      if (m.IsIndependent(candidate) &&
          IsImprovingSwap(value, fn.Eval(candidate), factor)) {
        return false;
      }
    }
  }
  return true;
}

int MatchingCardinality(const Matroid& m, SubsetMask s) {
  const int inside = s.size();
  const int outside = m.n() - inside;
  const auto c = m.min_circuit_size();
  const int k = c ? (*c - 1) / 2 : (m.n() - 1) / 2;
  return std::max(0, std::min({k, inside, outside}));
}

MatchingStepResult MatchingStep(const SetFunction& fn, const Matroid& m,
                                SubsetMask s) {
  CheckSameGroundSet(fn, m);
  MatchingStepResult result;
  result.k = MatchingCardinality(m, s);
  if (result.k == 0) return result;

  const std::vector<int> left = s.Elements();
  const std::vector<int> right = (SubsetMask::Full(fn.n()) - s).Elements();
  WeightedBipartiteGraph g;
  g.left_size = static_cast<int>(left.size());
  g.right_size = static_cast<int>(right.size());
  g.weights.reserve(left.size() * right.size());
  for (int i : left) {
    for (int j : right) g.weights.push_back(fn.SecondDifference(i, j, s));
  }
  const Matching matching = MaxWeightMatchingK(g, result.k);
  for (const auto& [a, b] : matching.pairs) {
    result.pairs.emplace_back(left[a], right[b]);
    result.s_prime = result.s_prime.with(left[a]).with(right[b]);
  }
  result.weight = matching.total_weight;
  if (!m.IsIndependent(result.s_prime)) {
    throw InvariantError("matching node set is dependent although smaller "
                         "than the smallest circuit");
  }
  result.value = fn.Eval(result.s_prime);
  return result;
}

SolveResult Solve(const SetFunction& fn, const Matroid& m,
                  const SolveConfig& cfg) {
  CheckSameGroundSet(fn, m);
  cfg.Validate();
  SolveResult result;
  result.s0 = BestPairInit(fn, m);
  result.search = LocalSearchFrom(fn, m, m.ExtendToBase(result.s0), cfg);
  result.matching = MatchingStep(fn, m, result.search.s);
  if (result.matching.value > result.search.value) {
    result.chosen = result.matching.s_prime;
    result.chosen_value = result.matching.value;
  } else {
    result.chosen = result.search.s;
    result.chosen_value = result.search.value;
  }
  return result;
}

OptResult BruteForceOpt(const SetFunction& fn, const Matroid& m, int n_max) {
  CheckSameGroundSet(fn, m);
  const int n = fn.n();
  if (n > n_max) {
    throw GuardError("brute-force optimum needs n <= " + std::to_string(n_max) +
                     ", got n = " + std::to_string(n));
  }
  OptResult best;
  best.value = fn.Eval(SubsetMask());
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    const SubsetMask s(mask);
    if (!m.IsIndependent(s)) continue;
    const double v = fn.Eval(s);
    if (v > best.value) {
      best.value = v;
      best.set = s;
    }
  }
  return best;
}

double GeneralRatioBound(double gamma, int r, int n, double epsilon) {
  if (r < 2) return std::numeric_limits<double>::infinity();
  const double growth = std::exp2(4.0 * gamma);
  const double nn = static_cast<double>(n) * n;
  return (2.0 * gamma + r - 1.0) / (r - 1.0) * growth * (5.0 * gamma + 2.0) +
         1.0 + growth * r * epsilon / nn;
}

double SupermodularRatioBound(double gamma, int r, std::optional<int> c, int n,
                              double epsilon) {
  const double nn = static_cast<double>(n) * n;
  double bound = std::numeric_limits<double>::infinity();
  if (r >= 2) {
    const double drift = r * epsilon * (gamma + r - 1.0) / ((r - 1.0) * nn);
    bound = 1.0 + (1.0 + gamma) * (4.0 * gamma / (r - 1.0) + 2.0 + drift);
  }
  if (c && *c > 2) {
    bound = std::min(bound, 1.0 + (1.0 + gamma) * (r * epsilon / nn + 2.0 +
                                                   3.0 * r / (*c - 1.0)));
  }
  return bound;
}

double IterationBound(double gamma, int r, int n, double epsilon) {
  const double nn = static_cast<double>(n) * n;
  const double numerator = std::log(std::max(1, r)) +
                           std::max(0, r - 2) * std::log1p(gamma) +
                           std::log(InductionConstant(r, gamma));
  return nn * numerator / std::log1p(epsilon / nn);
}

double TightIterationBound(double gamma, int r, int n, double epsilon) {
  const double nn = static_cast<double>(n) * n;
  return std::log(InductionConstant(r, gamma)) / std::log1p(epsilon / nn);
}

}  // namespace msls
