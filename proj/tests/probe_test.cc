// Copyright 2026 The ifom Authors
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

#include "ifom/probe.h"

#include <cmath>
#include <string>

#include "gtest/gtest.h"
#include "ifom/problems.h"
#include "ifom/random.h"
#include "ifom/saddle_solvers.h"

namespace ifom {
namespace {

TEST(AlgorithmNameTest, RoundTrip) {
  for (const char* name : {"sim-gda", "alt-gda", "eg"}) {
    EXPECT_EQ(AlgorithmName(ParseSaddleAlgorithm(name)), name);
  }
  EXPECT_THROW(ParseSaddleAlgorithm("gda"), ConfigError);
}

TEST(DefaultsTest, Grids) {
  const auto eta = DefaultStepGrid(10);
  ASSERT_EQ(eta.size(), 64u);
  EXPECT_NEAR(eta.front(), 1e-5, 1e-18);
  EXPECT_NEAR(eta.back(), 1.0, 1e-12);
  const auto a = DefaultAlphaGrid(SaddleAlgorithm::kSimGda, 1, 100);
  ASSERT_EQ(a.size(), 32u);
  EXPECT_EQ(a.front(), 0.0);
  EXPECT_NEAR(a.back(), 0.02, 1e-15);
  const auto e = DefaultAlphaGrid(SaddleAlgorithm::kEg, 1, 100);
  EXPECT_NEAR(e.back(), 0.15, 1e-15);
  EXPECT_NEAR(DefaultAlphaGrid(SaddleAlgorithm::kSimGda, 1, 2).back(), 0.95,
              1e-15);
  EXPECT_DOUBLE_EQ(DefaultScanTolerance(1, 100), 1e-8);
}

TEST(DefaultsTest, ScanStart) {
  CoupledQuadraticSpec spec;
  spec.dx = 2;
  spec.dy = 3;
  spec.linear_scale = 1;
  const SaddleProblem sp = CoupledQuadraticSaddle(spec);
  const Vector d = DefaultScanStart(sp) - sp.Solution();
  EXPECT_NEAR(d.norm(), 1.0, 1e-15);
  EXPECT_GT(d(0), 0);
  EXPECT_GT(d(1), 0);
  EXPECT_LT(d(2), 0);
  EXPECT_LT(d(4), 0);
}

// Rotation noise is feasible for the greedy adversary at alpha = mu/L, so
// greedy grows at least as fast as 1 + eta^2.
TEST(GreedyRunTest, DominatesRotation) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  const double alpha = sp.mu / sp.lip;
  for (double eta : {0.01, 0.1, 0.5}) {
    const SaddleTrace t = GreedyAdversarialRun(SaddleAlgorithm::kSimGda, sp,
                                               alpha, eta, 30, 256);
    for (size_t k = 1; k < t.rows.size(); ++k) {
      EXPECT_GE(t.rows[k].dist2 / t.rows[k - 1].dist2,
                (1 + eta * eta) * (1 - 1e-12));
    }
  }
}

TEST(GreedyRunTest, ZeroAlphaIsExact) {
  const SaddleProblem sp = EpsilonSaddle(0.2);
  const Vector z0 = DefaultScanStart(sp);
  for (auto alg : {SaddleAlgorithm::kSimGda, SaddleAlgorithm::kAltGda,
                   SaddleAlgorithm::kEg}) {
    const SaddleTrace g = GreedyAdversarialRun(alg, sp, 0.0, 0.1, 50, 64, z0);
    InexactOracle exact = InexactOracle::ForSaddle(sp, ExactPolicy{});
    const SaddleTrace e = RunSaddleAlgorithm(alg, sp, exact, z0, 0.1, 50);
    ASSERT_EQ(g.rows.size(), e.rows.size());
    for (size_t k = 0; k < g.rows.size(); ++k) {
      EXPECT_NEAR(g.rows[k].dist2, e.rows[k].dist2, 1e-14);
    }
  }
}

TEST(GreedyRunTest, EgStillContractsAtSmallNoise) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  const double alpha = 0.1 * std::sqrt(sp.mu / sp.lip);
  const SaddleTrace t = GreedyAdversarialRun(SaddleAlgorithm::kEg, sp, alpha,
                                             1 / (3 * sp.lip), 2000, 256);
  EXPECT_LT(FitRate(t.SquaredDistances()).rho, 1.0);
  EXPECT_LT(t.rows.back().dist2, 1e-3 * t.rows.front().dist2);
}

TEST(GreedyRunTest, DominatesSphere) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  const Vector z0 = DefaultScanStart(sp);
  const OperatorProblem op = ToOperator(sp);
  for (auto alg : {SaddleAlgorithm::kSimGda, SaddleAlgorithm::kAltGda,
                   SaddleAlgorithm::kEg}) {
    for (double alpha : {0.02, 0.1}) {
      const double eta = 0.05;
      const SaddleTrace g =
          GreedyAdversarialRun(alg, sp, alpha, eta, 300, 256, z0);
      for (uint64_t seed = 1; seed <= 3; ++seed) {
        InexactOracle sphere =
            InexactOracle::ForSaddle(sp, SpherePolicy{alpha, seed});
        const SaddleTrace s = RunSaddleAlgorithm(alg, sp, sphere, z0, eta, 300);
        EXPECT_GE(g.rows.back().dist2, s.rows.back().dist2)
            << AlgorithmName(alg) << " alpha " << alpha;
      }
    }
  }
}

TEST(GreedyRunTest, RejectsLargeEg) {
  CoupledQuadraticSpec spec;
  spec.dx = 3;
  spec.dy = 2;
  const SaddleProblem sp = CoupledQuadraticSaddle(spec);
  EXPECT_THROW(
      GreedyAdversarialRun(SaddleAlgorithm::kEg, sp, 0.1, 0.1, 5, 64),
      ConfigError);
  EXPECT_NO_THROW(
      GreedyAdversarialRun(SaddleAlgorithm::kSimGda, sp, 0.1, 0.1, 5, 64));
}

ScanConfig SmallScan(SaddleAlgorithm alg) {
  ScanConfig config;
  config.algorithm = alg;
  config.iterations = 2000;
  config.jobs = 2;
  return config;
}

TEST(ScanTest, SimGdaThresholdNearMuOverL) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  const double r = sp.mu / sp.lip;
  ScanConfig config = SmallScan(SaddleAlgorithm::kSimGda);
  config.alpha_grid = DefaultAlphaGrid(config.algorithm, sp.mu, sp.lip, 16);
  config.step_grid = DefaultStepGrid(sp.lip, 32);
  const ScanResult result = AlphaThresholdScan(sp, config);
  ASSERT_TRUE(result.threshold.has_value());
  EXPECT_GE(*result.threshold, 0.8 * r);
  EXPECT_LE(*result.threshold, 1.2 * r);
  // Exact-oracle row converges for some step.
  bool any = false;
  for (Verdict v : result.verdicts[0]) any |= v == Verdict::kConverged;
  EXPECT_TRUE(any);
}

TEST(ScanTest, ZeroAlphaRowConvergesForEveryMethod) {
  const SaddleProblem sp = EpsilonSaddle(0.5);
  for (auto alg : {SaddleAlgorithm::kSimGda, SaddleAlgorithm::kAltGda,
                   SaddleAlgorithm::kEg}) {
    ScanConfig config = SmallScan(alg);
    config.alpha_grid = {0.0};
    config.step_grid = DefaultStepGrid(sp.lip, 16);
    const ScanResult result = AlphaThresholdScan(sp, config);
    ASSERT_TRUE(result.threshold.has_value()) << AlgorithmName(alg);
    EXPECT_EQ(*result.threshold, 0.0);
  }
}

TEST(ScanTest, DeterministicAcrossJobCounts) {
  const SaddleProblem sp = EpsilonSaddle(0.3);
  ScanConfig config = SmallScan(SaddleAlgorithm::kAltGda);
  config.iterations = 300;
  config.alpha_grid = {0.0, 0.2, 0.4};
  config.step_grid = DefaultStepGrid(sp.lip, 6);
  config.seeds = {1, 2};
  config.jobs = 1;
  const std::string one = ScanToCsv(AlphaThresholdScan(sp, config));
  config.jobs = 3;
  const std::string three = ScanToCsv(AlphaThresholdScan(sp, config));
  EXPECT_EQ(one, three);
  EXPECT_EQ(one.substr(0, one.find('\n')), "alpha,eta,policy,rho_fit,verdict");
}

TEST(ScanTest, VerdictGridShape) {
  const SaddleProblem sp = EpsilonSaddle(0.3);
  ScanConfig config = SmallScan(SaddleAlgorithm::kSimGda);
  config.iterations = 200;
  config.alpha_grid = {0.0, 0.1, 0.9};
  config.step_grid = {0.01, 0.1, 1.0};
  const ScanResult result = AlphaThresholdScan(sp, config);
  ASSERT_EQ(result.verdicts.size(), 3u);
  ASSERT_EQ(result.verdicts[0].size(), 3u);
  ASSERT_EQ(result.rho.size(), 3u);
  for (Verdict v : result.verdicts[2]) EXPECT_NE(v, Verdict::kConverged);
  EXPECT_GE(result.rows.size(), 9u);
}

TEST(ScanTest, RejectsBadConfig) {
  const SaddleProblem sp = EpsilonSaddle(0.3);
  ScanConfig config = SmallScan(SaddleAlgorithm::kSimGda);
  config.alpha_grid = {0.1};
  config.step_grid = {0.1};
  config.iterations = 10;
  EXPECT_NO_THROW(AlphaThresholdScan(sp, config));
  config.step_grid = {0.2, 0.1};
  EXPECT_THROW(AlphaThresholdScan(sp, config), ConfigError);
  config.step_grid = {0.1};
  config.seeds.clear();
  EXPECT_THROW(AlphaThresholdScan(sp, config), ConfigError);
}

}  // namespace
}  // namespace ifom
