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

#include <bit>

#include "msls/simd.h"

namespace msls::simd::scalar {

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] * b[k];
  return sum;
}

double MaskedSum(std::span<const double> row, uint64_t mask) {
  if (row.size() < 64) mask &= (uint64_t{1} << row.size()) - 1;
  double sum = 0.0;
  for (; mask != 0; mask &= mask - 1) sum += row[std::countr_zero(mask)];
  return sum;
}

void ExpandProduct(std::span<double> p, std::size_t half, double prob) {
  const double keep = 1.0 - prob;
  for (std::size_t k = 0; k < half; ++k) {
    p[k + half] = p[k] * prob;
    p[k] *= keep;
  }
}

double PairedDifferenceDot(std::span<const double> lo_v,
                           std::span<const double> hi_v,
                           std::span<const double> lo_p,
                           std::span<const double> hi_p) {
  double sum = 0.0;
  for (std::size_t k = 0; k < lo_v.size(); ++k) {
    sum += (hi_v[k] - lo_v[k]) * (lo_p[k] + hi_p[k]);
  }
  return sum;
}

}  // namespace msls::simd::scalar
