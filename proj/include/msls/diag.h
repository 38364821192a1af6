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

// Exhaustive structural diagnostics of set functions: the meta-submodularity
// parameter gamma, sign classifications, the multilinear extension with its
// exact derivatives, one-sided smoothness checks, and a bundle of identity
// and inequality checks used by the local-search analysis.

#ifndef MSLS_DIAG_H_
#define MSLS_DIAG_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "msls/common.h"
#include "msls/setfn.h"

namespace msls {

inline constexpr int kMultilinearLimit = 20;

// f evaluated on every subset, indexed by mask.
class ValueTable {
 public:
  // Throws GuardError when fn.n() > n_max.
  static ValueTable Materialize(const SetFunction& fn, int n_max);

  int n() const { return n_; }
  std::span<const double> values() const { return values_; }
  double operator[](uint64_t mask) const { return values_[mask]; }
  double MaxAbs() const { return max_abs_; }

  double B(int i, uint64_t s) const {
    const uint64_t bit = uint64_t{1} << i;
    return values_[s | bit] - values_[s & ~bit];
  }
  // Same canonical expression as SetFunction::SecondDifference.
  double A(int i, int j, uint64_t s) const {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    const uint64_t bi = uint64_t{1} << i;
    const uint64_t bj = uint64_t{1} << j;
    const uint64_t base = s & ~(bi | bj);
    return values_[base | bi | bj] - values_[base | bi] - values_[base | bj] +
           values_[base];
  }

 private:
  int n_ = 0;
  double max_abs_ = 0.0;
  std::vector<double> values_;
};

struct GammaReport {
  // Largest |S| A_ij(S) / (B_i(S) + B_j(S)) over terms with A_ij(S) > 0.
  double gamma = 0.0;
  // Some positive A_ij(S) had B_i(S) + B_j(S) <= 0.
  bool infinite = false;
  // No positive A_ij(S) exists; gamma is 0 for every choice.
  bool vacuous = true;
  SubsetMask witness_set;
  int witness_i = -1;
  int witness_j = -1;
  // |S| A_ij(S) and B_i(S) + B_j(S) at the witness.
  double witness_lhs = 0.0;
  double witness_rhs = 0.0;
  int64_t zero_denominator_count = 0;
};

GammaReport GammaParameter(const ValueTable& table);
GammaReport GammaParameter(const SetFunction& fn,
                           int n_max = kDefaultExhaustiveLimit);

// Outcome of one exhaustive sign condition. When it fails the witness is
// the first violation in scan order.
struct PropertyCheck {
  bool holds = true;
  SubsetMask set;
  int i = -1;
  int j = -1;
  int k = -1;
  double value = 0.0;
};

struct ClassificationReport {
  PropertyCheck monotone;                 // B_i(S) >= 0; witness B_i(set)
  PropertyCheck submodular;               // A_ij(S) <= 0
  PropertyCheck supermodular;             // A_ij(S) >= 0
  PropertyCheck second_order_submodular;  // A_ij(S+k) - A_ij(S-k) <= 0
  double tolerance = 0.0;
};

// Violations must exceed 1e-12 + 1e-9 * max |f|.
ClassificationReport Classify(const ValueTable& table);
ClassificationReport Classify(const SetFunction& fn,
                              int n_max = kDefaultExhaustiveLimit);

// Product distribution p_x over all masks (length 2^n).
std::vector<double> ProductWeights(std::span<const double> x);

// F(x), grad F(x) and the Hessian (zero diagonal), all exact.
struct MultilinearDerivatives {
  double value = 0.0;
  std::vector<double> gradient;
  std::vector<double> hessian;  // row-major n x n

  double H(int i, int j) const {
    return hessian[static_cast<std::size_t>(i) * gradient.size() + j];
  }
};

// x must have table.n() entries in [0, 1]; throws PreconditionError
// otherwise.
double MultilinearExact(const ValueTable& table, std::span<const double> x);
double MultilinearGradientExact(const ValueTable& table,
                                std::span<const double> x, int i);
double MultilinearHessianExact(const ValueTable& table,
                               std::span<const double> x, int i, int j);
MultilinearDerivatives MultilinearAll(const ValueTable& table,
                                      std::span<const double> x);

// Convenience overloads; materialize under the 2^20 guard.
double MultilinearExact(const SetFunction& fn, std::span<const double> x);
double MultilinearGradientExact(const SetFunction& fn,
                                std::span<const double> x, int i);
double MultilinearHessianExact(const SetFunction& fn,
                               std::span<const double> x, int i, int j);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  int64_t samples = 0;
};

// Mean of f(R) over independent draws R ~ x. Deterministic in seed.
MonteCarloEstimate MultilinearMonteCarlo(const SetFunction& fn,
                                         std::span<const double> x,
                                         int64_t samples, uint64_t seed);

struct SmoothnessCheck {
  std::vector<double> x;
  std::vector<double> u;
  double sigma = 0.0;
  double lhs = 0.0;  // u^T H u / 2
  double rhs = 0.0;  // sigma * |u|_1 / |x|_1 * u^T grad
  double residual = 0.0;
};

// Throws PreconditionError when x == 0 or x, u leave the unit box.
SmoothnessCheck CheckOneSidedSmooth(const ValueTable& table,
                                    std::span<const double> x,
                                    std::span<const double> u, double sigma);
SmoothnessCheck CheckOneSidedSmooth(const MultilinearDerivatives& d,
                                    std::span<const double> x,
                                    std::span<const double> u, double sigma);

// |x|_1 H_ij - sigma (grad_i + grad_j).
double ExpectationInequalityResidual(const ValueTable& table,
                                     std::span<const double> x, int i, int j,
                                     double sigma);
double ExpectationInequalityResidual(const MultilinearDerivatives& d,
                                     std::span<const double> x, int i, int j,
                                     double sigma);

// 1 + sum_{m=2}^{r-1} beta_m with beta_2 = 2 gamma + 1 and
// beta_{m+1} = (1 + 2 gamma / m) beta_m. Bounds f(A) / f(best pair) for any
// independent A of size r when f is monotone gamma-MS.
double InductionConstant(int r, double gamma);

enum class LemmaStatus { kPass, kFail, kSkipped };
std::string_view LemmaStatusName(LemmaStatus status);

struct LemmaCheck {
  std::string name;
  LemmaStatus status = LemmaStatus::kPass;
  // Smallest (bound - observed) seen, normalized by the term scale; negative
  // means violated.
  double worst_slack = 0.0;
  int64_t checks = 0;
  std::string witness;
  std::string note;
};

struct LemmaOptions {
  int n_max = kDefaultExhaustiveLimit;
  uint64_t seed = 0;
  // Interior points sampled for the continuous checks.
  int samples = 20;
  Tolerance tolerance;
};

struct LemmaReport {
  GammaReport gamma;
  ClassificationReport classification;
  std::vector<LemmaCheck> checks;

  bool AllPassed() const;
};

LemmaReport VerifyLemmas(const SetFunction& fn, const LemmaOptions& options);

struct SmoothnessOptions {
  int n_max = kDefaultExhaustiveLimit;
  uint64_t seed = 0;
  int samples = 100;
  std::vector<double> alphas{1.0, 1.5, 2.0};
  Tolerance tolerance;
};

// Expectation inequality and one-sided smoothness with sigma =
// max(3 gamma, 2 gamma + 1) for supermodular instances, at every indicator
// point and `samples` interior points; then the subdomain form with
// sigma = alpha gamma on {x >= 1_S, |x|_1 <= alpha |S|} for each alpha.
std::vector<LemmaCheck> VerifySmoothness(const SetFunction& fn,
                                         const SmoothnessOptions& options);

}  // namespace msls

#endif  // MSLS_DIAG_H_
