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

#include <atomic>
#include <cstdlib>
#include <string>

#include "msls/common.h"
#include "msls/simd.h"

namespace msls::simd {
namespace {

bool CpuHasAvx2() {
#if defined(MSLS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa DetectIsa() {
  const char* force = std::getenv("MSLS_FORCE_SCALAR");
  if (force != nullptr && std::string(force) == "1") return Isa::kScalar;
  return CpuHasAvx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& ActiveSlot() {
  static std::atomic<Isa> slot{DetectIsa()};
  return slot;
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

Isa ActiveIsa() { return ActiveSlot().load(std::memory_order_relaxed); }

bool IsaAvailable(Isa isa) {
  return isa == Isa::kScalar || (isa == Isa::kAvx2 && CpuHasAvx2());
}

void SetActiveIsa(Isa isa) {
  if (!IsaAvailable(isa)) {
    throw PreconditionError("ISA not available: " + std::string(IsaName(isa)));
  }
  ActiveSlot().store(isa, std::memory_order_relaxed);
}

#if defined(MSLS_HAVE_AVX2)
#define MSLS_DISPATCH(fn, ...)                               \
  (ActiveIsa() == Isa::kAvx2 ? avx2::fn(__VA_ARGS__)         \
                             : scalar::fn(__VA_ARGS__))
#else
#define MSLS_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double Dot(std::span<const double> a, std::span<const double> b) {
  return MSLS_DISPATCH(Dot, a, b);
}

double MaskedSum(std::span<const double> row, uint64_t mask) {
  return MSLS_DISPATCH(MaskedSum, row, mask);
}

void ExpandProduct(std::span<double> p, std::size_t half, double prob) {
  MSLS_DISPATCH(ExpandProduct, p, half, prob);
}

double PairedDifferenceDot(std::span<const double> lo_v,
                           std::span<const double> hi_v,
                           std::span<const double> lo_p,
                           std::span<const double> hi_p) {
  return MSLS_DISPATCH(PairedDifferenceDot, lo_v, hi_v, lo_p, hi_p);
}

#undef MSLS_DISPATCH

}  // namespace msls::simd
