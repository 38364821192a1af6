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

#include "msls/setfn.h"

#include <bit>
#include <cmath>
#include <string>

#include "msls/simd.h"

namespace msls {

std::string_view FunctionKindName(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::kDiversity:
      return "diversity";
    case FunctionKind::kDiversityPlusModular:
      return "diversity_plus_modular";
    case FunctionKind::kCoverage:
      return "coverage";
    case FunctionKind::kTable:
      return "table";
    case FunctionKind::kWeightedSum:
      return "weighted_sum";
  }
  return "unknown";
}

namespace {

double EvalDiversity(const SetFunction::Diversity& div, SubsetMask s) {
  double pairs = 0.0;
  double modular = 0.0;
  for (uint64_t rest = s.bits(); rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    // Pairs {j, i} with j < i, so each pair is counted once.
    const uint64_t lower = s.bits() & ((uint64_t{1} << i) - 1);
    if (lower != 0) {
      pairs += simd::MaskedSum(div.distance.row(i).first(i), lower);
    }
    if (!div.modular.empty()) modular += div.modular[i];
  }
  return pairs + modular;
}

double EvalCoverage(const SetFunction::Coverage& cov, SubsetMask s) {
  const std::size_t words = cov.packed.empty() ? 0 : cov.packed[0].size();
  std::vector<uint64_t> covered(words, 0);
  for (uint64_t rest = s.bits(); rest != 0; rest &= rest - 1) {
    const auto& element = cov.packed[std::countr_zero(rest)];
    for (std::size_t w = 0; w < words; ++w) covered[w] |= element[w];
  }
  double total = 0.0;
  for (std::size_t w = 0; w < words; ++w) {
    for (uint64_t b = covered[w]; b != 0; b &= b - 1) {
      total += cov.weights[w * 64 + std::countr_zero(b)];
    }
  }
  return total;
}

}  // namespace

void SetFunction::CheckElement(int i) const {
  if (i < 0 || i >= n_) {
    throw DomainError("element " + std::to_string(i) +
                      " outside ground set of size " + std::to_string(n_));
  }
}

void SetFunction::CheckMask(SubsetMask s) const {
  if (!s.FitsIn(n_)) {
    throw DomainError("subset mask has bits outside ground set of size " +
                      std::to_string(n_));
  }
}

double SetFunction::EvalUnchecked(SubsetMask s) const {
  if (s.empty()) return 0.0;
  return std::visit(
      [s](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Diversity>) {
          return EvalDiversity(p, s);
        } else if constexpr (std::is_same_v<T, Coverage>) {
          return EvalCoverage(p, s);
        } else if constexpr (std::is_same_v<T, Table>) {
          return p.values[s.bits()];
        } else {
          double total = 0.0;
          for (const auto& [fn, coefficient] : p.components) {
            total += coefficient * fn->EvalUnchecked(s);
          }
          return total;
        }
      },
      payload_);
}

double SetFunction::Eval(SubsetMask s) const {
  CheckMask(s);
  return EvalUnchecked(s);
}

double SetFunction::Marginal(int i, SubsetMask s) const {
  CheckElement(i);
  CheckMask(s);
  return EvalUnchecked(s.with(i)) - EvalUnchecked(s.without(i));
}

double SetFunction::SecondDifference(int i, int j, SubsetMask s) const {
  CheckElement(i);
  CheckElement(j);
  CheckMask(s);
  if (i == j) return 0.0;
  // Canonical order makes A_ij and A_ji the same floating-point expression.
  if (i > j) std::swap(i, j);
  const SubsetMask base = s.without(i).without(j);
  return EvalUnchecked(base.with(i).with(j)) - EvalUnchecked(base.with(i)) -
         EvalUnchecked(base.with(j)) + EvalUnchecked(base);
}

const DistanceMatrix* SetFunction::distance() const {
  if (const auto* div = std::get_if<Diversity>(&payload_)) {
    return &div->distance;
  }
  return nullptr;
}

SetFunctionPtr BuildDiversity(DistanceMatrix distance,
                              std::optional<std::vector<double>> modular) {
  const int n = distance.size();
  GroundSet::Of(n);
  FunctionKind kind = FunctionKind::kDiversity;
  std::vector<double> weights;
  if (modular.has_value()) {
    if (static_cast<int>(modular->size()) != n) {
      throw ValidationError("modular weights have length " +
                            std::to_string(modular->size()) + ", expected " +
                            std::to_string(n));
    }
    for (std::size_t q = 0; q < modular->size(); ++q) {
      const double g = (*modular)[q];
      if (!std::isfinite(g) || g < 0.0) {
        throw ValidationError("modular weight " + std::to_string(q) +
                              " is negative or non-finite");
      }
    }
    weights = std::move(*modular);
    kind = FunctionKind::kDiversityPlusModular;
  }
  return SetFunctionPtr(new SetFunction(
      n, kind, SetFunction::Diversity{std::move(distance), std::move(weights)}));
}

SetFunctionPtr BuildCoverage(std::vector<std::vector<int>> incidence,
                             std::vector<double> weights) {
  const int n = static_cast<int>(incidence.size());
  GroundSet::Of(n);
  const int universe = static_cast<int>(weights.size());
  for (int u = 0; u < universe; ++u) {
    if (!std::isfinite(weights[u]) || weights[u] < 0.0) {
      throw ValidationError("universe weight " + std::to_string(u) +
                            " is negative or non-finite");
    }
  }
  const std::size_t words = (static_cast<std::size_t>(universe) + 63) / 64;
  std::vector<std::vector<uint64_t>> packed(n, std::vector<uint64_t>(words));
  for (int e = 0; e < n; ++e) {
    for (int item : incidence[e]) {
      if (item < 0 || item >= universe) {
        throw ValidationError("element " + std::to_string(e) +
                              " covers unknown universe item " +
                              std::to_string(item));
      }
      packed[e][item / 64] |= uint64_t{1} << (item % 64);
    }
  }
  return SetFunctionPtr(new SetFunction(
      n, FunctionKind::kCoverage,
      SetFunction::Coverage{universe, std::move(incidence), std::move(weights),
                            std::move(packed)}));
}

SetFunctionPtr BuildTable(std::vector<double> values) {
  const std::size_t size = values.size();
  if (size < 2 || !std::has_single_bit(size)) {
    throw ValidationError("table length " + std::to_string(size) +
                          " is not 2^n for some n >= 1");
  }
  const int n = std::countr_zero(size);
  GroundSet::Of(n);
  for (std::size_t m = 0; m < size; ++m) {
    if (!std::isfinite(values[m])) {
      throw ValidationError("table value at mask " + std::to_string(m) +
                            " is not finite");
    }
  }
  if (values[0] != 0.0) {
    throw ValidationError("table value of the empty set must be 0");
  }
  return SetFunctionPtr(new SetFunction(n, FunctionKind::kTable,
                                        SetFunction::Table{std::move(values)}));
}

SetFunctionPtr BuildWeightedSum(
    std::vector<std::pair<SetFunctionPtr, double>> components) {
  if (components.empty()) {
    throw ValidationError("weighted sum needs at least one component");
  }
  const int n = components.front().first->n();
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto& [fn, coefficient] = components[k];
    if (fn == nullptr) throw ValidationError("null weighted-sum component");
    if (fn->n() != n) {
      throw ValidationError("weighted-sum component " + std::to_string(k) +
                            " has ground set " + std::to_string(fn->n()) +
                            ", expected " + std::to_string(n));
    }
    if (!(coefficient > 0.0) || !std::isfinite(coefficient)) {
      throw ValidationError("weighted-sum coefficient " + std::to_string(k) +
                            " must be positive");
    }
  }
  return SetFunctionPtr(
      new SetFunction(n, FunctionKind::kWeightedSum,
                      SetFunction::WeightedSum{std::move(components)}));
}

}  // namespace msls
