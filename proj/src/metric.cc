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

#include "msls/metric.h"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

namespace msls {

std::string DistanceViolation::Describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kNotSquare:
      os << "row " << row << " has " << col << " entries; matrix not square";
      return os.str();
    case Kind::kNonFinite:
      os << "non-finite entry";
      break;
    case Kind::kNonzeroDiagonal:
      os << "nonzero diagonal";
      break;
    case Kind::kAsymmetric:
      os << "asymmetric entry";
      break;
    case Kind::kNegative:
      os << "negative entry";
      break;
  }
  os << " at (" << row << "," << col << "): " << value;
  return os.str();
}

namespace {

std::string JoinViolations(const std::vector<DistanceViolation>& violations) {
  std::string message = "invalid distance matrix:";
  for (const auto& v : violations) message += " " + v.Describe() + ";";
  return message;
}

}  // namespace

DistanceValidationError::DistanceValidationError(
    std::vector<DistanceViolation> violations)
    : ValidationError(JoinViolations(violations)),
      violations_(std::move(violations)) {}

std::vector<DistanceViolation> DistanceMatrix::Validate(
    const std::vector<std::vector<double>>& rows) {
  using Kind = DistanceViolation::Kind;
  std::vector<DistanceViolation> out;
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      out.push_back({Kind::kNotSquare, i, static_cast<int>(rows[i].size()),
                     0.0});
    }
  }
  if (!out.empty()) return out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = rows[i][j];
      if (!std::isfinite(v)) {
        out.push_back({Kind::kNonFinite, i, j, v});
        continue;
      }
      if (i == j) {
        if (std::fabs(v) > kRepairTolerance) {
          out.push_back({Kind::kNonzeroDiagonal, i, j, v});
        }
        continue;
      }
      if (v < -kRepairTolerance) out.push_back({Kind::kNegative, i, j, v});
      if (j > i && std::isfinite(rows[j][i]) &&
          std::fabs(v - rows[j][i]) > kRepairTolerance) {
        out.push_back({Kind::kAsymmetric, i, j, v});
      }
    }
  }
  return out;
}

DistanceMatrix DistanceMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  auto violations = Validate(rows);
  if (!violations.empty()) {
    throw DistanceValidationError(std::move(violations));
  }
  const int n = static_cast<int>(rows.size());
  std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = std::max(0.0, 0.5 * (rows[i][j] + rows[j][i]));
      entries[i * n + j] = v;
      entries[j * n + i] = v;
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

DistanceMatrix DistanceMatrix::Zero(int n) {
  return DistanceMatrix(n, std::vector<double>(static_cast<std::size_t>(n) * n,
                                               0.0));
}

std::vector<std::vector<double>> DistanceMatrix::ToRows() const {
  std::vector<std::vector<double>> rows(n_);
  for (int i = 0; i < n_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

double DistanceMatrix::MaxEntry() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, v);
  return m;
}

SemiMetricReport SemiMetricParameter(const DistanceMatrix& d) {
  SemiMetricReport report;
  std::array<int, 3> infinite_witness{-1, -1, -1};
  const int n = d.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double numerator = d(i, j);
      if (numerator <= 0.0) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double denominator = d(i, k) + d(k, j);
        if (denominator > 0.0) {
          const double ratio = numerator / denominator;
          if (ratio > report.sigma) {
            report.sigma = ratio;
            report.witness = {i, j, k};
          }
        } else if (!report.infinite) {
          report.infinite = true;
          infinite_witness = {i, j, k};
        }
      }
    }
  }
  if (report.infinite) report.witness = infinite_witness;
  return report;
}

NegativeTypeReport IsNegativeType(const DistanceMatrix& d, double tol) {
  const int n = d.size();
  NegativeTypeReport report;
  if (n <= 1) {
    report.negative_type = true;
    return report;
  }
  Eigen::MatrixXd dm(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) dm(i, j) = d(i, j);
  }
  // Orthonormal basis of {x : sum(x) = 0}; on the full space the all-ones
  // direction would add a spurious zero eigenvalue.
  Eigen::MatrixXd spanning = Eigen::MatrixXd::Zero(n, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    spanning(i, i) = 1.0;
    spanning(n - 1, i) = -1.0;
  }
  const Eigen::MatrixXd basis = spanning.householderQr().householderQ() *
                                Eigen::MatrixXd::Identity(n, n - 1);
  const Eigen::MatrixXd projected = basis.transpose() * dm * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      projected, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigen-decomposition of centered matrix failed");
  }
  report.max_eigenvalue = solver.eigenvalues().maxCoeff();
  report.negative_type =
      report.max_eigenvalue <= tol * std::max(1.0, d.MaxEntry());
  return report;
}

SqrtMetricReport IsSqrtMetric(const DistanceMatrix& d, double tol) {
  SqrtMetricReport report;
  const int n = d.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double direct = std::sqrt(d(i, j));
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double excess =
            direct - (std::sqrt(d(i, k)) + std::sqrt(d(k, j)));
        if (excess > tol && excess > report.worst_excess) {
          if (report.sqrt_metric) report.witness = {i, j, k};
          report.sqrt_metric = false;
          report.worst_excess = excess;
        }
      }
    }
  }
  return report;
}

bool IsMetric(const DistanceMatrix& d, double tol) {
  const int n = d.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (d(i, j) > d(i, k) + d(k, j) + tol) return false;
      }
    }
  }
  return true;
}

namespace {

// sum_k p_k ln(p_k / m_k) with m = (p + q) / 2 and 0 ln 0 = 0.
double KlToMidpoint(std::span<const double> p, std::span<const double> q) {
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0.0) continue;
    const double mid = 0.5 * (p[k] + q[k]);
    sum += p[k] * std::log(p[k] / mid);
  }
  return sum;
}

}  // namespace

double JensenShannon(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw ValidationError("JS divergence of vectors with different supports");
  }
  const double value = 0.5 * KlToMidpoint(p, q) + 0.5 * KlToMidpoint(q, p);
  // The divergence is non-negative; rounding can leave a -1e-17 residue.
  return std::max(0.0, value);
}

DistanceMatrix JsDivergenceMatrix(
    const std::vector<std::vector<double>>& distributions) {
  const int n = static_cast<int>(distributions.size());
  if (n == 0) throw ValidationError("no distributions given");
  const std::size_t support = distributions[0].size();
  for (int i = 0; i < n; ++i) {
    const auto& p = distributions[i];
    if (p.size() != support || support == 0) {
      throw ValidationError("distribution " + std::to_string(i) +
                            " has mismatched support size");
    }
    double total = 0.0;
    for (double v : p) {
      if (!std::isfinite(v) || v < 0.0) {
        throw ValidationError("distribution " + std::to_string(i) +
                              " has a negative or non-finite entry");
      }
      total += v;
    }
    if (std::fabs(total - 1.0) > 1e-9) {
      throw ValidationError("distribution " + std::to_string(i) +
                            " does not sum to 1");
    }
  }
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = JensenShannon(distributions[i], distributions[j]);
      rows[i][j] = v;
      rows[j][i] = v;
    }
  }
  return DistanceMatrix::FromRows(rows);
}

}  // namespace msls
