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


#include "msls/diag.h"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"

namespace msls {
namespace {

SetFunctionPtr AllOnesDiversity(int n) {
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 1.0));
  for (int i = 0; i < n; ++i) d[i][i] = 0.0;
  return BuildDiversity(DistanceMatrix::FromRows(d));
}

SetFunctionPtr RandomDiversity(int n, double power, uint64_t seed,
                               bool modular = false) {
  std::mt19937_64 rng(seed);
  const auto d = testing::DistanceRows(testing::RandomPoints(n, 2, rng), power);
  std::optional<std::vector<double>> g;
  if (modular) g = testing::RandomPoint(n, rng);
  return BuildDiversity(DistanceMatrix::FromRows(d), g);
}

SetFunctionPtr RandomCoverage(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> inc(n);
  for (int e = 0; e < n; ++e) {
    for (int u = 0; u < 2 * n; ++u) {
      if (rng() % 3 == 0) inc[e].push_back(u);
    }
  }
  return BuildCoverage(inc, std::vector<double>(2 * n, 1.0));
}

// Direct ratio scan of |S| A_ij(S) / (B_i(S) + B_j(S)).
double DirectGamma(const SetFunction& f) {
  const int n = f.n();
  double best = 0.0;
  for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
    const SubsetMask m(s);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double a = f.SecondDifference(i, j, m);
        if (a <= 1e-12) continue;
        best = std::max(best, m.size() * a / (f.Marginal(i, m) + f.Marginal(j, m)));
      }
    }
  }
  return best;
}

TEST(GammaTest, AllOnesDiversityIsOne) {
  const GammaReport r = GammaParameter(*AllOnesDiversity(4));
  EXPECT_NEAR(r.gamma, 1.0, 1e-12);
  EXPECT_FALSE(r.infinite);
  EXPECT_FALSE(r.vacuous);
  EXPECT_GE(r.witness_set.size(), 1);
  EXPECT_NE(r.witness_i, r.witness_j);
  EXPECT_NEAR(r.witness_lhs, r.gamma * r.witness_rhs, 1e-9);
}

TEST(GammaTest, CoverageIsVacuous) {
  const GammaReport r = GammaParameter(*RandomCoverage(7, 3));
  EXPECT_TRUE(r.vacuous);
  EXPECT_EQ(r.gamma, 0.0);
}

TEST(GammaTest, SquaredLineDiversity) {
  const auto f = BuildDiversity(
      DistanceMatrix::FromRows({{0, 1, 4}, {1, 0, 1}, {4, 1, 0}}));
  EXPECT_LE(GammaParameter(*f).gamma, 2.0 + 1e-6);
}

TEST(GammaTest, MatchesDirectScanAndWitness) {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    const auto f = RandomDiversity(7, 1.0 + 0.25 * seed, seed);
    const GammaReport r = GammaParameter(*f);
    EXPECT_NEAR(r.gamma, DirectGamma(*f), 1e-9);
    const double a = f->SecondDifference(r.witness_i, r.witness_j, r.witness_set);
    const double b = f->Marginal(r.witness_i, r.witness_set) +
                     f->Marginal(r.witness_j, r.witness_set);
    EXPECT_NEAR(r.witness_set.size() * a, r.gamma * b, 1e-9);
  }
}

TEST(GammaTest, InfiniteWhenMarginalsVanish) {
  // A_01 = 2 everywhere while B_0({0}) + B_1({0}) = f({0, 1}) = 0.
  const GammaReport r = GammaParameter(*BuildTable({0, -1, -1, 0}));
  EXPECT_TRUE(r.infinite);
  EXPECT_GT(r.zero_denominator_count, 0);
}

TEST(GammaTest, Guard) {
  EXPECT_THROW(GammaParameter(*AllOnesDiversity(6), 5), GuardError);
}

TEST(ClassifyTest, Families) {
  const ClassificationReport div = Classify(*RandomDiversity(7, 1.0, 9));
  EXPECT_TRUE(div.monotone.holds);
  EXPECT_TRUE(div.supermodular.holds);
  EXPECT_TRUE(div.second_order_submodular.holds);
  EXPECT_FALSE(div.submodular.holds);
  const ClassificationReport cov = Classify(*RandomCoverage(7, 4));
  EXPECT_TRUE(cov.monotone.holds);
  EXPECT_TRUE(cov.submodular.holds);
}

TEST(ClassifyTest, NonMonotoneWitness) {
  const ClassificationReport r = Classify(*BuildTable({0, 1, 1, 0.5}));
  EXPECT_FALSE(r.monotone.holds);
  EXPECT_EQ(r.monotone.i, 0);
  EXPECT_EQ(r.monotone.set, SubsetMask::Of({1}));
  EXPECT_DOUBLE_EQ(r.monotone.value, -0.5);
}

TEST(ClassifyTest, SubmodularImpliesNoPositiveSecondDifference) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto f = RandomCoverage(6, rng());
    if (Classify(*f).submodular.holds) {
      EXPECT_TRUE(GammaParameter(*f).vacuous);
    }
  }
}

TEST(MultilinearTest, IndicatorsGiveDifferences) {
  std::mt19937_64 rng(17);
  const auto f = BuildTable(testing::RandomTable(5, rng));
  const ValueTable table = ValueTable::Materialize(*f, 20);
  for (uint64_t s = 0; s < 32; ++s) {
    std::vector<double> x(5);
    for (int i = 0; i < 5; ++i) x[i] = (s >> i) & 1;
    const MultilinearDerivatives d = MultilinearAll(table, x);
    EXPECT_NEAR(d.value, f->Eval(SubsetMask(s)), 1e-12);
    for (int i = 0; i < 5; ++i) {
      EXPECT_NEAR(d.gradient[i], f->Marginal(i, SubsetMask(s)), 1e-12);
      EXPECT_NEAR(MultilinearGradientExact(table, x, i), d.gradient[i], 1e-12);
      for (int j = 0; j < 5; ++j) {
        EXPECT_NEAR(d.H(i, j), f->SecondDifference(i, j, SubsetMask(s)), 1e-12);
        EXPECT_NEAR(MultilinearHessianExact(table, x, i, j), d.H(i, j), 1e-12);
      }
    }
  }
  EXPECT_EQ(MultilinearExact(*f, std::vector<double>(5, 0.0)), 0.0);
}

TEST(MultilinearTest, MatchesDefinitionAndQuadraticForm) {
  std::mt19937_64 rng(19);
  const auto pts = testing::RandomPoints(7, 2, rng);
  const auto d = testing::DistanceRows(pts, 1.0);
  const std::vector<double> g = testing::RandomPoint(7, rng);
  const auto f = BuildDiversity(DistanceMatrix::FromRows(d), g);
  std::vector<double> t(128);
  for (uint64_t s = 0; s < 128; ++s) t[s] = testing::DiversityValue(d, g, s);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> x = testing::RandomPoint(7, rng);
    double quad = 0.0;
    for (int i = 0; i < 7; ++i) {
      quad += g[i] * x[i];
      for (int j = 0; j < 7; ++j) quad += 0.5 * d[i][j] * x[i] * x[j];
    }
    const double exact = MultilinearExact(*f, x);
    EXPECT_NEAR(exact, quad, 1e-10);
    EXPECT_NEAR(exact, testing::Expectation(t, x), 1e-10);
  }
}

TEST(MultilinearTest, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(23);
  const auto f = BuildTable(testing::RandomMonotoneTable(8, rng));
  const ValueTable table = ValueTable::Materialize(*f, 20);
  const double h = 1e-5;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x = testing::RandomPoint(8, rng);
    for (double& v : x) v = 0.1 + 0.8 * v;
    const MultilinearDerivatives d = MultilinearAll(table, x);
    for (int i = 0; i < 8; ++i) {
      auto up = x, down = x;
      up[i] += h;
      down[i] -= h;
      EXPECT_NEAR(d.gradient[i],
                  (MultilinearExact(table, up) - MultilinearExact(table, down)) /
                      (2 * h),
                  1e-6);
      for (int j = 0; j < 8; ++j) {
        if (i == j) continue;
        auto uj = x, dj = x;
        uj[j] += h;
        dj[j] -= h;
        EXPECT_NEAR(d.H(i, j),
                    (MultilinearGradientExact(table, uj, i) -
                     MultilinearGradientExact(table, dj, i)) /
                        (2 * h),
                    1e-6);
      }
    }
  }
}

TEST(MultilinearTest, RejectsPointsOutsideBox) {
  const auto f = AllOnesDiversity(3);
  EXPECT_THROW(MultilinearExact(*f, std::vector<double>{0.5, 1.5, 0.0}),
               PreconditionError);
  EXPECT_THROW(MultilinearExact(*f, std::vector<double>{0.5, 0.5}),
               PreconditionError);
}

TEST(MonteCarloTest, DegenerateAndDeterministic) {
  const auto f = RandomDiversity(6, 1.0, 29);
  const MonteCarloEstimate zero =
      MultilinearMonteCarlo(*f, std::vector<double>(6, 0.0), 100, 1);
  EXPECT_EQ(zero.mean, 0.0);
  EXPECT_EQ(zero.standard_error, 0.0);
  const std::vector<double> ind = {1, 0, 1, 1, 0, 0};
  const MonteCarloEstimate at =
      MultilinearMonteCarlo(*f, ind, 100, 2);
  EXPECT_NEAR(at.mean, f->Eval(SubsetMask::Of({0, 2, 3})), 1e-12);
  EXPECT_EQ(at.standard_error, 0.0);
  const std::vector<double> x = {0.2, 0.5, 0.7, 0.1, 0.9, 0.4};
  const auto a = MultilinearMonteCarlo(*f, x, 500, 77);
  const auto b = MultilinearMonteCarlo(*f, x, 500, 77);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.standard_error, b.standard_error);
}

TEST(MonteCarloTest, ConvergesToExact) {
  const auto f = RandomDiversity(10, 1.0, 31);
  std::mt19937_64 rng(37);
  const std::vector<double> x = testing::RandomPoint(10, rng);
  const double exact = MultilinearExact(*f, x);
  const MonteCarloEstimate big = MultilinearMonteCarlo(*f, x, 100000, 5);
  EXPECT_LE(std::fabs(big.mean - exact), 4.0 * big.standard_error);
  int inside = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const MonteCarloEstimate e = MultilinearMonteCarlo(*f, x, 2000, seed);
    if (std::fabs(e.mean - exact) <= 4.0 * e.standard_error) ++inside;
  }
  EXPECT_GE(inside, 48);
}

TEST(SmoothnessTest, SupermodularConstantHolds) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = RandomDiversity(7, 1.5, seed, seed % 2 == 1);
    const double gamma = GammaParameter(*f).gamma;
    const double sigma = std::max(3 * gamma, 2 * gamma + 1);
    const ValueTable table = ValueTable::Materialize(*f, 20);
    std::mt19937_64 rng(seed + 100);
    for (int t = 0; t < 20; ++t) {
      const auto x = testing::RandomPoint(7, rng);
      const auto u = testing::RandomPoint(7, rng);
      const SmoothnessCheck c = CheckOneSidedSmooth(table, x, u, sigma);
      EXPECT_LE(c.residual, 1e-9);
      EXPECT_NEAR(c.residual, c.lhs - c.rhs, 1e-15);
      for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
          EXPECT_LE(ExpectationInequalityResidual(table, x, i, j, sigma), 1e-9);
        }
      }
    }
  }
}

TEST(SmoothnessTest, ZeroDirectionAndModular) {
  const auto f = RandomDiversity(5, 1.0, 41);
  const ValueTable table = ValueTable::Materialize(*f, 20);
  const std::vector<double> x = {0.3, 0.2, 0.9, 0.4, 0.5};
  const SmoothnessCheck c =
      CheckOneSidedSmooth(table, x, std::vector<double>(5, 0.0), 2.0);
  EXPECT_EQ(c.lhs, 0.0);
  EXPECT_LE(c.residual, 0.0);
  EXPECT_THROW(CheckOneSidedSmooth(table, std::vector<double>(5, 0.0), x, 2.0),
               PreconditionError);
  const auto modular = BuildDiversity(DistanceMatrix::Zero(5),
                                      std::vector<double>{1, 2, 3, 4, 5});
  const ValueTable mt = ValueTable::Materialize(*modular, 20);
  EXPECT_DOUBLE_EQ(ExpectationInequalityResidual(mt, x, 1, 3, 2.0),
                   -2.0 * (2.0 + 4.0));
  EXPECT_LE(ExpectationInequalityResidual(table, x, 2, 2, 2.0), 0.0);
}

TEST(SmoothnessTest, ContrapositiveOfHalfGammaSmoothness) {
  // One-sided gamma/2-smoothness at indicator points forces gamma-MS, so a
  // gamma witness must also break smoothness for any smaller constant.
  const auto f = RandomDiversity(6, 2.0, 43);
  const GammaReport r = GammaParameter(*f);
  const ValueTable table = ValueTable::Materialize(*f, 20);
  std::vector<double> x(6), u(6, 0.0);
  for (int i = 0; i < 6; ++i) x[i] = r.witness_set.contains(i) ? 1.0 : 0.0;
  u[r.witness_i] = 1.0;
  u[r.witness_j] = 1.0;
  const double below = 0.9 * r.gamma / 2.0;
  // u^T H u / 2 = A_ij, |u|_1 / |x|_1 = 2 / |S|, u^T grad = B_i + B_j.
  EXPECT_GT(CheckOneSidedSmooth(table, x, u, below).residual, 0.0);
}

TEST(InductionConstantTest, Recursion) {
  EXPECT_DOUBLE_EQ(InductionConstant(2, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(InductionConstant(3, 1.0), 1.0 + 3.0);
  // beta_3 = (1 + 2/2) * 3 = 6.
  EXPECT_DOUBLE_EQ(InductionConstant(4, 1.0), 1.0 + 3.0 + 6.0);
  EXPECT_DOUBLE_EQ(InductionConstant(4, 0.0), 3.0);
}

TEST(LemmaTest, MetricDiversityPassesEverything) {
  LemmaOptions o;
  o.seed = 1;
  const LemmaReport r = VerifyLemmas(*RandomDiversity(8, 1.0, 47), o);
  EXPECT_TRUE(r.AllPassed());
  for (const LemmaCheck& c : r.checks) {
    EXPECT_NE(c.status, LemmaStatus::kFail) << c.name << ": " << c.witness;
    if (c.name == "sum_grad_ews" || c.name == "second_order_structure" ||
        c.name == "discrete_integral") {
      EXPECT_EQ(c.status, LemmaStatus::kPass) << c.name;
      EXPECT_GT(c.checks, 0);
    }
  }
}

TEST(LemmaTest, ModularIntegralIsExact) {
  const auto f = BuildDiversity(DistanceMatrix::Zero(6),
                                std::vector<double>{1, 2, 3, 4, 5, 6});
  const LemmaReport r = VerifyLemmas(*f, LemmaOptions{});
  for (const LemmaCheck& c : r.checks) {
    if (c.name == "discrete_integral") {
      EXPECT_EQ(c.status, LemmaStatus::kPass);
      EXPECT_GE(c.worst_slack, -1e-15);
    }
  }
}

TEST(LemmaTest, HypothesisFailuresSkip) {
  std::mt19937_64 rng(53);
  const auto f = BuildTable(testing::RandomTable(5, rng));
  const LemmaReport r = VerifyLemmas(*f, LemmaOptions{});
  bool skipped = false;
  for (const LemmaCheck& c : r.checks) {
    if (c.name == "discrete_integral") EXPECT_EQ(c.status, LemmaStatus::kPass);
    if (c.name == "sum_grad_ews") {
      EXPECT_EQ(c.status, LemmaStatus::kSkipped);
      EXPECT_FALSE(c.note.empty());
      skipped = true;
    }
  }
  EXPECT_TRUE(skipped);
}

TEST(LemmaTest, SmoothnessBundlePasses) {
  SmoothnessOptions o;
  o.samples = 30;
  const auto checks = VerifySmoothness(*RandomDiversity(7, 1.5, 59, true), o);
  EXPECT_FALSE(checks.empty());
  for (const LemmaCheck& c : checks) {
    EXPECT_EQ(c.status, LemmaStatus::kPass) << c.name << ": " << c.witness;
  }
}

}  // namespace
}  // namespace msls
