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

// Maximum-weight bipartite matching with a prescribed number of edges.

#ifndef MSLS_MATCHING_H_
#define MSLS_MATCHING_H_

#include <cstddef>
#include <utility>
#include <vector>

namespace msls {

// Complete bipartite graph; weights are row-major, left x right.
struct WeightedBipartiteGraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<double> weights;

  // Throws ValidationError on ragged rows or non-finite weights.
  static WeightedBipartiteGraph FromRows(
      const std::vector<std::vector<double>>& rows, int right_size);
  double weight(int left, int right) const {
    return weights[static_cast<std::size_t>(left) * right_size + right];
  }
};

struct Matching {
  // Sorted by (left, right).
  std::vector<std::pair<int, int>> pairs;
  double total_weight = 0.0;
};

// A maximum-weight matching with exactly k edges. The right side is padded
// with left_size - k dummy columns whose weight equals the largest real
// weight, an assignment problem is solved with shortest augmenting paths,
// and the dummy pairs are dropped. Ties go to the lexicographically
// smallest pair list. Weights may be negative. Throws
// PreconditionError unless 0 <= k <= min(left_size, right_size).
Matching MaxWeightMatchingK(const WeightedBipartiteGraph& g, int k);

}  // namespace msls

#endif  // MSLS_MATCHING_H_
