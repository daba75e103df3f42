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

#include "ifom/saddle_solvers.h"

#include <cmath>

#include "gtest/gtest.h"
#include "ifom/problems.h"
#include "ifom/rates.h"

namespace ifom {
namespace {

Vector Point(double x, double y) {
  Vector z(2);
  z << x, y;
  return z;
}

TEST(SimGdaTest, ExactContraction) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  InexactOracle oracle = InexactOracle::ForSaddle(sp, ExactPolicy{});
  const double eta = sp.mu / (sp.lip * sp.lip);
  const SaddleTrace t = SimGdaRun(sp, oracle, Point(1, 1), eta, eta, 50);
  const double bound = 1 - std::pow(sp.mu / sp.lip, 2) + 1e-12;
  for (size_t k = 1; k < t.rows.size(); ++k) {
    EXPECT_LE(t.rows[k].dist2, bound * t.rows[k - 1].dist2);
  }
  EXPECT_EQ(t.rows.back().calls, 50);
}

TEST(SimGdaTest, RotationGrowth) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  for (double eta : {0.01, 0.1, 1.0}) {
    InexactOracle oracle = InexactOracle::ForSaddle(sp, RotationPolicy{});
    const SaddleTrace t = SimGdaRun(sp, oracle, Point(0.6, -0.8), eta, eta, 20);
    for (size_t k = 1; k < t.rows.size(); ++k) {
      EXPECT_NEAR(t.rows[k].dist2 / t.rows[k - 1].dist2, 1 + eta * eta, 1e-12);
    }
  }
}

TEST(SimGdaTest, Stationary) {
  CoupledQuadraticSpec spec;
  spec.seed = 2;
  spec.linear_scale = 1;
  const SaddleProblem sp = CoupledQuadraticSaddle(spec);
  InexactOracle oracle = InexactOracle::ForSaddle(sp, SpherePolicy{0.2, 1});
  const SaddleTrace t = SimGdaRun(sp, oracle, sp.Solution(), 0.1, 0.1, 10);
  for (const auto& r : t.rows) EXPECT_LT(r.dist2, 1e-28);
}

TEST(SimGdaTest, LyapunovColumn) {
  const SaddleProblem sp = EpsilonSaddle(0.5);
  InexactOracle oracle = InexactOracle::ForSaddle(sp, ExactPolicy{});
  const SaddleTrace t = SimGdaRun(sp, oracle, Point(2, 3), 0.5, 0.25, 1);
  EXPECT_DOUBLE_EQ(t.rows[0].lyapunov, 4 / 0.5 + 9 / 0.25);
  EXPECT_DOUBLE_EQ(t.rows[0].dist2, 13);
}

TEST(AltGdaTest, CardanoStepConverges) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  const double eta = *AltGdaStep(sp.mu, sp.lip, 0.0);
  InexactOracle oracle = InexactOracle::ForSaddle(sp, ExactPolicy{});
  const SaddleTrace t = AltGdaRun(sp, oracle, Point(1, -1), eta, eta, 3000);
  const RateFit fit = FitRate(t.SquaredDistances());
  EXPECT_LT(fit.rho, 1.0);
  EXPECT_LE(fit.rho, AltGdaContraction(sp.mu, sp.lip, 0.0, eta) + 1e-6);
  EXPECT_EQ(t.rows.back().calls, 6000);
}

TEST(AltGdaTest, BilinearAdversaryNeverShrinks) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  for (int j = 0; j < 16; ++j) {
    const double eta = std::pow(10.0, -4 + 4.0 * j / 15);
    InexactOracle oracle = InexactOracle::ForSaddle(sp, RotationPolicy{});
    const Vector z0 = Point(1, -1) / std::sqrt(2.0);
    const SaddleTrace t = AltGdaRun(sp, oracle, z0, eta, eta, 1000);
    EXPECT_GE(t.rows.back().dist2, t.rows.front().dist2 * (1 - 1e-12))
        << "eta " << eta;
  }
}

TEST(AltGdaTest, Stationary) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  InexactOracle oracle = InexactOracle::ForSaddle(sp, SpherePolicy{0.05, 1});
  const SaddleTrace t = AltGdaRun(sp, oracle, Point(0, 0), 0.1, 0.1, 10);
  for (const auto& r : t.rows) EXPECT_EQ(r.dist2, 0.0);
}

TEST(EgTest, ExactEnvelope) {
  const SaddleProblem sp = EpsilonSaddle(0.01);
  const OperatorProblem op = ToOperator(sp);
  const double c = 3;
  InexactOracle oracle = InexactOracle::ForOperator(op, ExactPolicy{});
  const SaddleTrace t = EgRun(op, oracle, Point(1, 1), 1 / (c * op.lip), 2000);
  const double f = EgContraction(op.mu, op.lip, c);
  for (size_t k = 0; k < t.rows.size(); ++k) {
    EXPECT_LE(t.rows[k].dist2, t.rows[0].dist2 * std::pow(f, k) * (1 + 1e-12));
  }
  EXPECT_EQ(t.rows.back().calls, 4000);
  EXPECT_DOUBLE_EQ(t.rows[0].lyapunov, 2 * c * op.lip);
}

TEST(EgTest, SphereNoiseEnvelope) {
  const SaddleProblem sp = EpsilonSaddle(0.01);
  const OperatorProblem op = ToOperator(sp);
  const double alpha = 0.3 * std::sqrt(op.mu / op.lip);
  const EgThresholdResult thr = EgBestThreshold(op.mu, op.lip);
  ASSERT_LT(alpha, thr.alpha_max);
  InexactOracle oracle = InexactOracle::ForOperator(op, SpherePolicy{alpha, 4});
  const SaddleTrace t =
      EgRun(op, oracle, Point(1, 1), 1 / (thr.c * op.lip), 2000);
  const double f = EgContraction(op.mu, op.lip, thr.c);
  for (size_t k = 0; k < t.rows.size(); ++k) {
    EXPECT_LE(t.rows[k].dist2, t.rows[0].dist2 * std::pow(f, k));
  }
}

TEST(EgTest, Stationary) {
  const OperatorProblem op = ToOperator(EpsilonSaddle(0.1));
  InexactOracle oracle = InexactOracle::ForOperator(op, SpherePolicy{0.1, 2});
  const SaddleTrace t = EgRun(op, oracle, Point(0, 0), 0.1, 5);
  for (const auto& r : t.rows) EXPECT_EQ(r.dist2, 0.0);
}

TEST(SaddleDivergenceTest, Stops) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  InexactOracle oracle = InexactOracle::ForSaddle(sp, ExactPolicy{});
  const SaddleTrace t = SimGdaRun(sp, oracle, Point(1, 0), 5, 5, 1000);
  EXPECT_EQ(t.status, RunStatus::kDiverged);
  EXPECT_LT(t.rows.size(), 20u);
}

TEST(SaddleArgsTest, Rejects) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  InexactOracle oracle = InexactOracle::ForSaddle(sp, ExactPolicy{});
  EXPECT_THROW(SimGdaRun(sp, oracle, Point(1, 0), 0, 1, 5), ConfigError);
  EXPECT_THROW(AltGdaRun(sp, oracle, Vector::Zero(3), 1, 1, 5), ConfigError);
}

}  // namespace
}  // namespace ifom
