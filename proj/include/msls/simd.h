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

// Data-parallel inner loops used by the set-function and multilinear
// machinery. Each kernel has a scalar reference implementation and, on
// x86-64, an AVX2 variant. The variant is picked once at startup from CPUID;
// MSLS_FORCE_SCALAR=1 in the environment pins the scalar path.
//
// The vector variants reassociate sums, so results agree with the scalar
// reference to rounding, not bit-for-bit. Within one process the selection
// is fixed, which keeps repeated runs byte-identical.

#ifndef MSLS_SIMD_H_
#define MSLS_SIMD_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace msls::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view IsaName(Isa isa);

// ISA picked at startup (or by SetActiveIsa).
Isa ActiveIsa();
// True when the CPU and build both support `isa`.
bool IsaAvailable(Isa isa);
// Overrides the dispatch target. Throws PreconditionError if unavailable.
// Intended for tests and benchmarks; not thread-safe against running kernels.
void SetActiveIsa(Isa isa);

// sum_k a[k] * b[k]. Spans must have equal length.
double Dot(std::span<const double> a, std::span<const double> b);

// Sum of row[k] over the set bits k of `mask`; bits at or beyond row.size()
// are ignored. row.size() <= 64.
double MaskedSum(std::span<const double> row, uint64_t mask);

// One doubling step of a product distribution: for k < half,
//   p[k + half] = p[k] * prob;  p[k] = p[k] * (1 - prob).
// p.size() must be at least 2 * half.
void ExpandProduct(std::span<double> p, std::size_t half, double prob);

// sum_k (hi_v[k] - lo_v[k]) * (lo_p[k] + hi_p[k]); all spans equal length.
// This is the contiguous block of the first-derivative sum of a multilinear
// extension for a fixed coordinate.
double PairedDifferenceDot(std::span<const double> lo_v,
                           std::span<const double> hi_v,
                           std::span<const double> lo_p,
                           std::span<const double> hi_p);

// Per-ISA entry points, exposed so equivalence tests can call both sides.
namespace scalar {
double Dot(std::span<const double> a, std::span<const double> b);
double MaskedSum(std::span<const double> row, uint64_t mask);
void ExpandProduct(std::span<double> p, std::size_t half, double prob);
double PairedDifferenceDot(std::span<const double> lo_v,
                           std::span<const double> hi_v,
                           std::span<const double> lo_p,
                           std::span<const double> hi_p);
}  // namespace scalar

#if defined(MSLS_HAVE_AVX2)
namespace avx2 {
double Dot(std::span<const double> a, std::span<const double> b);
double MaskedSum(std::span<const double> row, uint64_t mask);
void ExpandProduct(std::span<double> p, std::size_t half, double prob);
double PairedDifferenceDot(std::span<const double> lo_v,
                           std::span<const double> hi_v,
                           std::span<const double> lo_p,
                           std::span<const double> hi_p);
}  // namespace avx2
#endif

}  // namespace msls::simd

#endif  // MSLS_SIMD_H_
