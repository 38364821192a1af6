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

// Dissimilarity matrices and their approximate-triangle-inequality
// parameters.

#ifndef MSLS_METRIC_H_
#define MSLS_METRIC_H_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "msls/common.h"

namespace msls {

// One broken invariant of a candidate distance matrix.
struct DistanceViolation {
  enum class Kind { kNotSquare, kNonFinite, kNonzeroDiagonal, kAsymmetric,
                    kNegative };
  Kind kind;
  int row = 0;
  int col = 0;
  double value = 0.0;

  std::string Describe() const;
};

// Thrown by DistanceMatrix::FromRows; carries every violation found.
class DistanceValidationError : public ValidationError {
 public:
  explicit DistanceValidationError(std::vector<DistanceViolation> violations);
  const std::vector<DistanceViolation>& violations() const {
    return violations_;
  }

 private:
  std::vector<DistanceViolation> violations_;
};

// Symmetric, zero-diagonal, non-negative n x n matrix (row-major).
class DistanceMatrix {
 public:
  // Deviations up to this magnitude are repaired instead of rejected:
  // diagonal set to 0, pairs averaged, tiny negatives clamped to 0.
  static constexpr double kRepairTolerance = 1e-12;

  // Lists every violation; an empty result means FromRows will succeed.
  static std::vector<DistanceViolation> Validate(
      const std::vector<std::vector<double>>& rows);
  static DistanceMatrix FromRows(const std::vector<std::vector<double>>& rows);
  static DistanceMatrix Zero(int n);

  int size() const { return n_; }
  double operator()(int i, int j) const { return entries_[i * n_ + j]; }
  std::span<const double> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }
  std::vector<std::vector<double>> ToRows() const;
  double MaxEntry() const;

 private:
  DistanceMatrix(int n, std::vector<double> entries)
      : n_(n), entries_(std::move(entries)) {}

  int n_ = 0;
  std::vector<double> entries_;
};

// Smallest sigma with d(i,j) <= sigma * (d(i,k) + d(k,j)) for all triples.
struct SemiMetricReport {
  double sigma = 0.0;
  // Set when some d(i,j) > 0 has a k with d(i,k) + d(k,j) == 0; sigma then
  // holds the largest finite ratio seen.
  bool infinite = false;
  // (i, j, k) attaining the maximum; -1 entries when no triple constrains.
  std::array<int, 3> witness{-1, -1, -1};
};

SemiMetricReport SemiMetricParameter(const DistanceMatrix& d);

struct NegativeTypeReport {
  bool negative_type = false;
  // Largest eigenvalue of D restricted to the hyperplane sum(x) = 0, i.e. the
  // maximum of x^T D x over unit x with sum(x) = 0.
  double max_eigenvalue = 0.0;
};

// Decides x^T D x <= 0 on the hyperplane sum(x) = 0, spectrally. The
// threshold is tol * max(1, max entry of D).
NegativeTypeReport IsNegativeType(const DistanceMatrix& d, double tol = 1e-9);

struct SqrtMetricReport {
  bool sqrt_metric = true;
  // First triple (i, j, k) with sqrt d(i,j) > sqrt d(i,k) + sqrt d(k,j) + tol.
  std::array<int, 3> witness{-1, -1, -1};
  double worst_excess = 0.0;
};

SqrtMetricReport IsSqrtMetric(const DistanceMatrix& d, double tol = 1e-9);

// True when the plain triangle inequality holds up to tol.
bool IsMetric(const DistanceMatrix& d, double tol = 1e-9);

// Jensen-Shannon divergence (natural log, 0 log 0 = 0).
double JensenShannon(std::span<const double> p, std::span<const double> q);

// Pairwise JS divergence matrix of probability vectors. Every vector must be
// non-negative, share one support size, and sum to 1 within 1e-9.
DistanceMatrix JsDivergenceMatrix(
    const std::vector<std::vector<double>>& distributions);

}  // namespace msls

#endif  // MSLS_METRIC_H_
