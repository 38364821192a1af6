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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "msls/diag.h"
#include "test_util.h"

namespace msls {
namespace {

DistanceMatrix AllOnes(int n) {
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 1.0));
  for (int i = 0; i < n; ++i) d[i][i] = 0.0;
  return DistanceMatrix::FromRows(d);
}

TEST(SetFunctionTest, AllOnesDiversityCountsPairs) {
  const auto f = BuildDiversity(AllOnes(4));
  EXPECT_DOUBLE_EQ(f->Eval(SubsetMask::Of({0, 1, 2})), 3.0);
  EXPECT_DOUBLE_EQ(f->Eval(SubsetMask()), 0.0);
  EXPECT_DOUBLE_EQ(f->Marginal(3, SubsetMask::Of({0, 1, 2})), 3.0);
}

TEST(SetFunctionTest, TableLookup) {
  const auto f = BuildTable({0, 1, 2, 5});
  EXPECT_DOUBLE_EQ(f->Eval(SubsetMask::Of({0, 1})), 5.0);
  EXPECT_DOUBLE_EQ(f->Eval(SubsetMask::Of({1})), 2.0);
  EXPECT_DOUBLE_EQ(f->Eval(SubsetMask()), 0.0);
}

TEST(SetFunctionTest, ModularMarginalIsWeight) {
  const auto f = BuildDiversity(DistanceMatrix::Zero(2),
                                std::vector<double>{2.0, 7.0});
  EXPECT_DOUBLE_EQ(f->Marginal(1, SubsetMask()), 7.0);
  EXPECT_EQ(f->kind(), FunctionKind::kDiversityPlusModular);
}

TEST(SetFunctionTest, DiversityBuilderExamples) {
  EXPECT_DOUBLE_EQ(BuildDiversity(AllOnes(3))->Eval(SubsetMask::Full(3)), 3.0);
  EXPECT_DOUBLE_EQ(BuildDiversity(DistanceMatrix::Zero(3),
                                  std::vector<double>{1, 2, 3})
                       ->Eval(SubsetMask::Of({0, 2})),
                   4.0);
  EXPECT_DOUBLE_EQ(BuildDiversity(AllOnes(3), std::vector<double>{1, 1, 1})
                       ->Eval(SubsetMask::Of({0, 1})),
                   3.0);
}

TEST(SetFunctionTest, DiversityMatchesDirectSum) {
  std::mt19937_64 rng(7);
  const auto d = testing::DistanceRows(testing::RandomPoints(7, 3, rng), 1.0);
  const std::vector<double> g = testing::RandomPoint(7, rng);
  const auto f = BuildDiversity(DistanceMatrix::FromRows(d), g);
  for (uint64_t s = 0; s < 128; ++s) {
    EXPECT_NEAR(f->Eval(SubsetMask(s)), testing::DiversityValue(d, g, s),
                1e-12);
  }
}

TEST(SetFunctionTest, SecondDifferenceOfDiversityIsMatrixEntry) {
  std::mt19937_64 rng(3);
  const auto d = testing::DistanceRows(testing::RandomPoints(6, 2, rng), 1.0);
  const auto f = BuildDiversity(DistanceMatrix::FromRows(d));
  for (uint64_t s = 0; s < 64; ++s) {
    for (int i = 0; i < 6; ++i) {
      EXPECT_EQ(f->SecondDifference(i, i, SubsetMask(s)), 0.0);
      for (int j = 0; j < 6; ++j) {
        if (i == j) continue;
        EXPECT_NEAR(f->SecondDifference(i, j, SubsetMask(s)), d[i][j], 1e-12);
      }
    }
  }
}

TEST(SetFunctionTest, CoverageExamples) {
  EXPECT_DOUBLE_EQ(BuildCoverage({{0}, {1}}, {1.0, 1.0})->Eval(SubsetMask::Full(2)),
                   2.0);
  const auto same = BuildCoverage({{0}, {0}}, {5.0});
  EXPECT_DOUBLE_EQ(same->Eval(SubsetMask::Of({0})), 5.0);
  EXPECT_DOUBLE_EQ(same->Eval(SubsetMask::Of({0, 1})), 5.0);
}

TEST(SetFunctionTest, CoverageMatchesUnionWeight) {
  std::mt19937_64 rng(11);
  const int n = 6;
  const int universe = 70;  // spans two packed words
  std::vector<std::vector<int>> inc(n);
  std::vector<double> w(universe);
  for (int e = 0; e < n; ++e) {
    for (int u = 0; u < universe; ++u) {
      if (rng() % 4 == 0) inc[e].push_back(u);
    }
  }
  for (double& v : w) v = static_cast<double>(rng() % 10);
  const auto f = BuildCoverage(inc, w);
  for (uint64_t s = 0; s < 64; ++s) {
    std::vector<char> hit(universe, 0);
    double want = 0.0;
    for (int e = 0; e < n; ++e) {
      if (!((s >> e) & 1)) continue;
      for (int u : inc[e]) {
        if (!hit[u]) want += w[u];
        hit[u] = 1;
      }
    }
    EXPECT_DOUBLE_EQ(f->Eval(SubsetMask(s)), want);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        EXPECT_LE(f->SecondDifference(i, j, SubsetMask(s)), 1e-12);
      }
    }
  }
}

TEST(SetFunctionTest, WeightedSumScalesComponents) {
  const auto a = BuildTable({0, 1, 2, 4});
  const auto b = BuildTable({0, 3, 1, 1});
  const auto f = BuildWeightedSum({{a, 2.0}, {b, 0.5}});
  for (uint64_t s = 0; s < 4; ++s) {
    EXPECT_DOUBLE_EQ(f->Eval(SubsetMask(s)),
                     2.0 * a->Eval(SubsetMask(s)) + 0.5 * b->Eval(SubsetMask(s)));
  }
}

TEST(SetFunctionTest, WeightedSumPreservesGamma) {
  std::mt19937_64 rng(5);
  const auto d = testing::DistanceRows(testing::RandomPoints(6, 2, rng), 1.0);
  const auto f = BuildDiversity(DistanceMatrix::FromRows(d));
  const auto twice = BuildWeightedSum({{f, 2.0}});
  EXPECT_NEAR(GammaParameter(*f).gamma, GammaParameter(*twice).gamma, 1e-9);
}

TEST(SetFunctionTest, DifferencesIgnoreMembership) {
  std::mt19937_64 rng(19);
  const auto f = BuildTable(testing::RandomTable(5, rng));
  for (uint64_t s = 0; s < 32; ++s) {
    const SubsetMask m(s);
    for (int i = 0; i < 5; ++i) {
      EXPECT_EQ(f->Marginal(i, m), f->Marginal(i, m.with(i)));
      EXPECT_EQ(f->Marginal(i, m), f->Marginal(i, m.without(i)));
      for (int j = 0; j < 5; ++j) {
        const double a = f->SecondDifference(i, j, m);
        EXPECT_EQ(a, f->SecondDifference(j, i, m));
        EXPECT_EQ(a, f->SecondDifference(i, j, m.with(i).with(j)));
        EXPECT_EQ(a, f->SecondDifference(i, j, m.without(i).with(j)));
        EXPECT_EQ(a, f->SecondDifference(i, j, m.with(i).without(j)));
      }
    }
  }
}

TEST(SetFunctionTest, EvalEqualsMultilinearAtIndicator) {
  std::mt19937_64 rng(23);
  const auto f = BuildTable(testing::RandomTable(5, rng));
  for (uint64_t s = 0; s < 32; ++s) {
    std::vector<double> x(5);
    for (int i = 0; i < 5; ++i) x[i] = (s >> i) & 1;
    EXPECT_NEAR(f->Eval(SubsetMask(s)), MultilinearExact(*f, x), 1e-12);
  }
}

TEST(SetFunctionTest, RejectsBadInput) {
  const auto f = BuildTable({0, 1, 2, 5});
  EXPECT_THROW(f->Eval(SubsetMask::Of({2})), DomainError);
  EXPECT_THROW(f->Marginal(2, SubsetMask()), DomainError);
  EXPECT_THROW(BuildTable({0, 1, 2}), ValidationError);
  EXPECT_THROW(BuildTable({1, 1, 2, 5}), ValidationError);
  EXPECT_THROW(BuildDiversity(AllOnes(2), std::vector<double>{1.0, -1.0}),
               ValidationError);
  EXPECT_THROW(BuildCoverage({{0}, {3}}, {1.0, 1.0}), ValidationError);
  EXPECT_THROW(BuildCoverage({{0}}, {-1.0}), ValidationError);
  EXPECT_THROW(BuildWeightedSum({{f, 0.0}}), ValidationError);
  EXPECT_THROW(BuildWeightedSum({{f, 1.0}, {BuildTable({0, 1}), 1.0}}),
               ValidationError);
}

}  // namespace
}  // namespace msls
