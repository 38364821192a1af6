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


// Shared helpers for the unit tests: seeded random inputs and direct
// evaluations written independently of the library code paths.

#ifndef MSLS_TESTS_TEST_UTIL_H_
#define MSLS_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "msls/common.h"

namespace msls::testing {

inline std::vector<std::vector<double>> RandomPoints(int n, int dim,
                                                     std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> p(n, std::vector<double>(dim));
  for (auto& row : p) {
    for (double& v : row) v = u(rng);
  }
  return p;
}

// |p - q|^power for every pair of rows.
inline std::vector<std::vector<double>> DistanceRows(
    const std::vector<std::vector<double>>& p, double power) {
  const int n = static_cast<int>(p.size());
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t k = 0; k < p[i].size(); ++k) {
        sq += (p[i][k] - p[j][k]) * (p[i][k] - p[j][k]);
      }
      d[i][j] = i == j ? 0.0 : std::pow(sq, power / 2.0);
    }
  }
  return d;
}

// sum over unordered pairs in S of d plus the modular part.
inline double DiversityValue(const std::vector<std::vector<double>>& d,
                             const std::vector<double>& g, uint64_t s) {
  double total = 0.0;
  const int n = static_cast<int>(d.size());
  for (int i = 0; i < n; ++i) {
    if (!((s >> i) & 1)) continue;
    if (!g.empty()) total += g[i];
    for (int j = i + 1; j < n; ++j) {
      if ((s >> j) & 1) total += d[i][j];
    }
  }
  return total;
}

// Random table of a monotone function with f(empty) = 0.
inline std::vector<double> RandomMonotoneTable(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> t(uint64_t{1} << n, 0.0);
  for (uint64_t s = 1; s < t.size(); ++s) {
    double lo = 0.0;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1) lo = std::max(lo, t[s & ~(uint64_t{1} << i)]);
    }
    t[s] = lo + u(rng);
  }
  return t;
}

inline std::vector<double> RandomTable(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> t(uint64_t{1} << n, 0.0);
  for (uint64_t s = 1; s < t.size(); ++s) t[s] = u(rng);
  return t;
}

inline std::vector<double> RandomPoint(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = u(rng);
  return x;
}

// Product-measure expectation of t written as a plain sum over masks.
inline double Expectation(const std::vector<double>& t,
                          const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  double total = 0.0;
  for (uint64_t s = 0; s < t.size(); ++s) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= ((s >> i) & 1) ? x[i] : 1.0 - x[i];
    total += p * t[s];
  }
  return total;
}

}  // namespace msls::testing

#endif  // MSLS_TESTS_TEST_UTIL_H_
