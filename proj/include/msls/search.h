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

// Swap local search under a matroid constraint, followed by a matching step
// over second differences, plus an exhaustive optimum for small instances.
//
//   1. S0 = best independent pair
//   2. S  = any base containing S0
//   3. while some swap S - i + j is independent and f(S - i + j) >=
//      (1 + eps / n^2) f(S): apply it
//   4. S' = node set of a max-weight matching of size floor((c - 1) / 2)
//      between S and its complement, weights A_ij(S)
//   5. return the better of S and S'

#ifndef MSLS_SEARCH_H_
#define MSLS_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msls/common.h"
#include "msls/matching.h"
#include "msls/matroid.h"
#include "msls/setfn.h"

namespace msls {

enum class PivotRule { kFirstImprovement, kBestImprovement };

std::string_view PivotRuleName(PivotRule rule);
// Accepts "first" and "best".
PivotRule ParsePivotRule(std::string_view name);

struct SolveConfig {
  double epsilon = 0.1;
  PivotRule pivot = PivotRule::kFirstImprovement;
  int64_t max_iterations = 1'000'000;
  uint64_t seed = 0;

  // Throws ValidationError unless epsilon > 0 and max_iterations > 0.
  void Validate() const;
};

// An accepted improving swap.
struct SwapStep {
  int64_t iteration = 0;
  int removed = -1;
  int inserted = -1;
  double value = 0.0;
};

// Improvements below this are ignored when f(S) = 0, where the
// multiplicative test cannot fire.
inline constexpr double kZeroValueThreshold = 1e-12;

// Raised when local search exceeds max_iterations; carries the trace so far.
class IterationLimitError : public GuardError {
 public:
  IterationLimitError(const std::string& what, std::vector<SwapStep> trace)
      : GuardError(what), trace_(std::move(trace)) {}
  const std::vector<SwapStep>& trace() const { return trace_; }

 private:
  std::vector<SwapStep> trace_;
};

// The independent pair of largest value (lexicographically first on ties);
// otherwise the best independent singleton; otherwise the empty set.
SubsetMask BestPairInit(const SetFunction& fn, const Matroid& m);

struct LocalSearchResult {
  SubsetMask initial;  // base the swaps start from
  SubsetMask s;
  double value = 0.0;
  std::vector<SwapStep> trace;
};

// True when the swap from value `current` to `candidate` is accepted.
bool IsImprovingSwap(double current, double candidate, double factor);

// Swap search from `start`, which must be a base. Scans i ascending in S and
// j ascending outside S.
LocalSearchResult LocalSearchFrom(const SetFunction& fn, const Matroid& m,
                                  SubsetMask start, const SolveConfig& cfg);
// Swap search from the base extending BestPairInit.
LocalSearchResult LocalSearch(const SetFunction& fn, const Matroid& m,
                              const SolveConfig& cfg);

// Re-scans every swap of S; true when none clears the acceptance test.
bool IsApproximateLocalOptimum(const SetFunction& fn, const Matroid& m,
                               SubsetMask s, double epsilon);

// floor((c - 1) / 2) capped by |S| and n - |S|; without circuits,
// floor((n - 1) / 2) under the same caps.
int MatchingCardinality(const Matroid& m, SubsetMask s);

struct MatchingStepResult {
  SubsetMask s_prime;
  double value = 0.0;
  int k = 0;
  // Pairs as ground-set elements (i in S, j outside S).
  std::vector<std::pair<int, int>> pairs;
  double weight = 0.0;
};

MatchingStepResult MatchingStep(const SetFunction& fn, const Matroid& m,
                                SubsetMask s);

struct SolveResult {
  SubsetMask s0;
  LocalSearchResult search;
  MatchingStepResult matching;
  SubsetMask chosen;
  double chosen_value = 0.0;
};

// Ties between S and S' go to S.
SolveResult Solve(const SetFunction& fn, const Matroid& m,
                  const SolveConfig& cfg);

struct OptResult {
  SubsetMask set;
  double value = 0.0;
};

// Maximum of f over all independent sets; the first maximizer in ascending
// mask order. Throws GuardError when n > n_max.
OptResult BruteForceOpt(const SetFunction& fn, const Matroid& m,
                        int n_max = 20);

// f(OPT) / f(S) bound for a local optimum of a monotone gamma-MS function:
//   (2 gamma + r - 1) / (r - 1) * 2^{4 gamma} (5 gamma + 2) + 1
//     + 2^{4 gamma} r eps / n^2.
// Infinite when r < 2.
double GeneralRatioBound(double gamma, int r, int n, double epsilon);

// f(OPT) / max(f(S), f(S')) bound for supermodular, second-order submodular
// gamma-MS functions: the minimum of
//   1 + (1 + gamma)(4 gamma / (r - 1) + 2 + r eps (gamma + r - 1) /
//                   ((r - 1) n^2))
// and, when c > 2,
//   1 + (1 + gamma)(r eps / n^2 + 2 + 3 r / (c - 1)).
double SupermodularRatioBound(double gamma, int r, std::optional<int> c, int n,
                              double epsilon);

// Swap-count bound n^2 (ln r + (r - 2) ln(gamma + 1) + ln K) / ln(1 + eps/n^2)
// with K = InductionConstant(r, gamma); the (r - 2) term is clamped at 0.
double IterationBound(double gamma, int r, int n, double epsilon);
// ln K / ln(1 + eps / n^2), the count implied directly by the value chain.
double TightIterationBound(double gamma, int r, int n, double epsilon);

}  // namespace msls

#endif  // MSLS_SEARCH_H_
