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

// Compiled with -mavx2 only; never called unless CPUID reports AVX2.

#include <immintrin.h>

#include "msls/simd.h"

namespace msls::simd::avx2 {
namespace {

inline double HorizontalSum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  const __m128d swapped = _mm_unpackhi_pd(pair, pair);
  return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

}  // namespace

double Dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(&a[k]),
                                             _mm256_loadu_pd(&b[k])));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(&a[k + 4]),
                                             _mm256_loadu_pd(&b[k + 4])));
  }
  for (; k + 4 <= n; k += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(&a[k]),
                                             _mm256_loadu_pd(&b[k])));
  }
  double sum = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) sum += a[k] * b[k];
  return sum;
}

double MaskedSum(std::span<const double> row, uint64_t mask) {
  const std::size_t n = row.size();
  if (n < 64) mask &= (uint64_t{1} << n) - 1;
  const __m256i lane_bits = _mm256_set_epi64x(8, 4, 2, 1);
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const uint64_t nibble = (mask >> k) & 0xFU;
    if (nibble == 0) continue;
    const __m256i bits = _mm256_set1_epi64x(static_cast<long long>(nibble));
    const __m256i selected =
        _mm256_cmpeq_epi64(_mm256_and_si256(bits, lane_bits), lane_bits);
    acc = _mm256_add_pd(acc, _mm256_and_pd(_mm256_castsi256_pd(selected),
                                           _mm256_loadu_pd(&row[k])));
  }
  double sum = HorizontalSum(acc);
  for (; k < n; ++k) {
    if ((mask >> k) & 1U) sum += row[k];
  }
  return sum;
}

void ExpandProduct(std::span<double> p, std::size_t half, double prob) {
  const __m256d take = _mm256_set1_pd(prob);
  const double keep_scalar = 1.0 - prob;
  const __m256d keep = _mm256_set1_pd(keep_scalar);
  std::size_t k = 0;
  for (; k + 4 <= half; k += 4) {
    const __m256d v = _mm256_loadu_pd(&p[k]);
    _mm256_storeu_pd(&p[k + half], _mm256_mul_pd(v, take));
    _mm256_storeu_pd(&p[k], _mm256_mul_pd(v, keep));
  }
  for (; k < half; ++k) {
    p[k + half] = p[k] * prob;
    p[k] *= keep_scalar;
  }
}

double PairedDifferenceDot(std::span<const double> lo_v,
                           std::span<const double> hi_v,
                           std::span<const double> lo_p,
                           std::span<const double> hi_p) {
  const std::size_t n = lo_v.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(&hi_v[k]),
                                       _mm256_loadu_pd(&lo_v[k]));
    const __m256d weight = _mm256_add_pd(_mm256_loadu_pd(&lo_p[k]),
                                         _mm256_loadu_pd(&hi_p[k]));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, weight));
  }
  double sum = HorizontalSum(acc);
  for (; k < n; ++k) sum += (hi_v[k] - lo_v[k]) * (lo_p[k] + hi_p[k]);
  return sum;
}

}  // namespace msls::simd::avx2
