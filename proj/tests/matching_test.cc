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


#include "msls/matching.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "msls/common.h"

namespace msls {
namespace {

// Best exactly-k matching by trying every injective row subset to column
// assignment via permutations of the columns.
double ExhaustiveBest(const WeightedBipartiteGraph& g, int k) {
  double best = -1e300;
  const int rows = g.left_size;
  for (uint64_t rs = 0; rs < (uint64_t{1} << rows); ++rs) {
    if (std::popcount(rs) != k) continue;
    std::vector<int> chosen;
    for (int i = 0; i < rows; ++i) {
      if ((rs >> i) & 1) chosen.push_back(i);
    }
    std::vector<int> cols(g.right_size);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      double w = 0.0;
      for (int t = 0; t < k; ++t) w += g.weight(chosen[t], cols[t]);
      best = std::max(best, w);
    } while (std::next_permutation(cols.begin(), cols.end()));
  }
  return k == 0 ? 0.0 : best;
}

TEST(MatchingTest, SmallExamples) {
  const auto g = WeightedBipartiteGraph::FromRows({{3, 1}, {2, 4}}, 2);
  const Matching two = MaxWeightMatchingK(g, 2);
  EXPECT_EQ(two.pairs, (std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}));
  EXPECT_DOUBLE_EQ(two.total_weight, 7.0);
  const Matching one = MaxWeightMatchingK(g, 1);
  EXPECT_EQ(one.pairs, (std::vector<std::pair<int, int>>{{1, 1}}));
  EXPECT_DOUBLE_EQ(one.total_weight, 4.0);
  const Matching none = MaxWeightMatchingK(g, 0);
  EXPECT_TRUE(none.pairs.empty());
  EXPECT_EQ(none.total_weight, 0.0);
}

TEST(MatchingTest, TiesGoToLexicographicPairs) {
  const auto g = WeightedBipartiteGraph::FromRows({{1, 1, 1}, {1, 1, 1}}, 3);
  EXPECT_EQ(MaxWeightMatchingK(g, 1).pairs,
            (std::vector<std::pair<int, int>>{{0, 0}}));
  EXPECT_EQ(MaxWeightMatchingK(g, 2).pairs,
            (std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}));
}

TEST(MatchingTest, NegativeWeightsStillExactK) {
  const auto g = WeightedBipartiteGraph::FromRows({{-5, -1}, {-2, -7}}, 2);
  const Matching m = MaxWeightMatchingK(g, 2);
  EXPECT_DOUBLE_EQ(m.total_weight, -3.0);
  EXPECT_EQ(MaxWeightMatchingK(g, 1).total_weight, -1.0);
}

TEST(MatchingTest, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int t = 0; t < 300; ++t) {
    WeightedBipartiteGraph g;
    g.left_size = 1 + static_cast<int>(rng() % 6);
    g.right_size = 1 + static_cast<int>(rng() % 6);
    for (int e = 0; e < g.left_size * g.right_size; ++e) {
      g.weights.push_back(t % 2 ? u(rng) : static_cast<double>(rng() % 4));
    }
    const int k =
        static_cast<int>(rng() % (std::min(g.left_size, g.right_size) + 1));
    const Matching m = MaxWeightMatchingK(g, k);
    ASSERT_EQ(static_cast<int>(m.pairs.size()), k);
    EXPECT_NEAR(m.total_weight, ExhaustiveBest(g, k), 1e-9) << "trial " << t;
    std::vector<char> lu(g.left_size, 0), ru(g.right_size, 0);
    double sum = 0.0;
    for (const auto& [a, b] : m.pairs) {
      EXPECT_FALSE(lu[a]);
      EXPECT_FALSE(ru[b]);
      lu[a] = ru[b] = 1;
      sum += g.weight(a, b);
    }
    EXPECT_NEAR(sum, m.total_weight, 1e-12);
    EXPECT_TRUE(std::is_sorted(m.pairs.begin(), m.pairs.end()));
  }
}

TEST(MatchingTest, RejectsOutOfRangeK) {
  const auto g = WeightedBipartiteGraph::FromRows({{1, 2}}, 2);
  EXPECT_THROW(MaxWeightMatchingK(g, 2), PreconditionError);
  EXPECT_THROW(MaxWeightMatchingK(g, -1), PreconditionError);
  EXPECT_THROW(WeightedBipartiteGraph::FromRows({{1, 2}, {3}}, 2),
               ValidationError);
}

}  // namespace
}  // namespace msls
