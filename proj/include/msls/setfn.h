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

// Set-function oracles over a ground set {0, ..., n-1} and their first and
// second order differences
//
//   B_i(S)    = f(S + i) - f(S - i)
//   A_ij(S)   = f(S+i+j) - f(S+i-j) - f(S-i+j) + f(S-i-j).
//
// Every oracle is normalized so that f(empty) = 0 and is immutable once
// built; evaluation is pure and safe to call concurrently.

#ifndef MSLS_SETFN_H_
#define MSLS_SETFN_H_

#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "msls/common.h"
#include "msls/metric.h"

namespace msls {

enum class FunctionKind {
  kDiversity,
  kDiversityPlusModular,
  kCoverage,
  kTable,
  kWeightedSum,
};

std::string_view FunctionKindName(FunctionKind kind);

class SetFunction;
using SetFunctionPtr = std::shared_ptr<const SetFunction>;

class SetFunction {
 public:
  // Pairwise payload: f(R) = sum_{pairs in R} D(q,q') + sum_{q in R} g(q).
  struct Diversity {
    DistanceMatrix distance;
    std::vector<double> modular;  // empty when absent
  };
  // f(S) = total weight of the universe items covered by S.
  struct Coverage {
    int universe_size = 0;
    std::vector<std::vector<int>> incidence;
    std::vector<double> weights;
    // incidence re-packed as one bitset (in 64-bit words) per element.
    std::vector<std::vector<uint64_t>> packed;
  };
  struct Table {
    std::vector<double> values;  // indexed by mask, length 2^n
  };
  struct WeightedSum {
    std::vector<std::pair<SetFunctionPtr, double>> components;
  };
  using Payload = std::variant<Diversity, Coverage, Table, WeightedSum>;

  int n() const { return n_; }
  FunctionKind kind() const { return kind_; }
  const Payload& payload() const { return payload_; }

  // f(S). Throws DomainError if S has bits at or beyond n.
  double Eval(SubsetMask s) const;
  // B_i(S); independent of whether i is in S.
  double Marginal(int i, SubsetMask s) const;
  // A_ij(S); symmetric in (i, j) bit-for-bit and zero when i == j.
  double SecondDifference(int i, int j, SubsetMask s) const;

  // The pairwise matrix when this is a diversity oracle.
  const DistanceMatrix* distance() const;

 private:
  friend SetFunctionPtr BuildDiversity(DistanceMatrix,
                                       std::optional<std::vector<double>>);
  friend SetFunctionPtr BuildCoverage(std::vector<std::vector<int>>,
                                      std::vector<double>);
  friend SetFunctionPtr BuildTable(std::vector<double>);
  friend SetFunctionPtr BuildWeightedSum(
      std::vector<std::pair<SetFunctionPtr, double>>);

  SetFunction(int n, FunctionKind kind, Payload payload)
      : n_(n), kind_(kind), payload_(std::move(payload)) {}

  double EvalUnchecked(SubsetMask s) const;
  void CheckElement(int i) const;
  void CheckMask(SubsetMask s) const;

  int n_;
  FunctionKind kind_;
  Payload payload_;
};

// Diversity plus optional non-negative modular weights.
SetFunctionPtr BuildDiversity(
    DistanceMatrix distance,
    std::optional<std::vector<double>> modular = std::nullopt);

// incidence[e] lists the universe items element e covers; the universe is
// 0..weights.size()-1 and weights must be non-negative.
SetFunctionPtr BuildCoverage(std::vector<std::vector<int>> incidence,
                             std::vector<double> weights);

// values[mask] = f(mask); length 2^n with values[0] == 0.
SetFunctionPtr BuildTable(std::vector<double> values);

// sum_k c_k f_k with every c_k > 0 and a common ground set.
SetFunctionPtr BuildWeightedSum(
    std::vector<std::pair<SetFunctionPtr, double>> components);

}  // namespace msls

#endif  // MSLS_SETFN_H_
