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

// Seeded random instance families.
//
//   metric-random      Euclidean distances of points in [0,1]^dim
//   semimetric-power   the same distances raised to `power` >= 1
//   negtype-sqeuclid   squared Euclidean distances
//   js-random          Jensen-Shannon divergences of Dirichlet(1) vectors
//   coverage-random    weighted coverage over a random incidence
//
// The first four produce diversity functions (optionally plus random modular
// weights). Every instance carries a uniform, partition or graphic matroid.

#ifndef MSLS_GEN_H_
#define MSLS_GEN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "msls/io.h"

namespace msls {

struct GenParams {
  std::string kind;
  int n = 0;
  uint64_t seed = 0;
  int dim = 2;
  double power = 2.0;
  int support = 0;   // 0: 4 or 5, drawn per instance
  int universe = 0;  // 0: 2n
  double coverage_probability = 0.3;
  bool modular = false;
  std::string matroid = "uniform";
  int rank = 0;  // 0: max(2, n / 3)
  int blocks = 2;
};

const std::vector<std::string>& GeneratorKinds();

// Throws ValidationError on unknown kinds or out-of-range parameters.
Instance Generate(const GenParams& params);

// Euclidean distances between rows of `points`, each raised to `power`.
std::vector<std::vector<double>> PowerDistances(
    const std::vector<std::vector<double>>& points, double power);

}  // namespace msls

#endif  // MSLS_GEN_H_
