/*
 * Copyright 2026 The calib Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "calib/decision.h"

#include <gtest/gtest.h>

#include <cmath>

#include "calib/basic_measures.h"
#include "calib/errors.h"
#include "calib/fixtures.h"
#include "test_util.h"

namespace calib {
namespace {

EmpiricalJoint ConstantHalf(double eps) {
  return Project(CdlExample1(eps).instance);
}

TEST(BestResponseTest, Examples) {
  const DecisionTask matching = MatchingTask();
  EXPECT_EQ(BestResponse(matching, 0.3), 0u);
  EXPECT_EQ(BestResponse(matching, 0.5), 0u);  // tie
  EXPECT_EQ(BestResponse(matching, 0.7), 1u);

  const DecisionTask quadratic = QuadraticTask(0.01);
  for (int k : {0, 13, 50, 87, 100}) {
    EXPECT_EQ(BestResponse(quadratic, k / 100.0), static_cast<std::size_t>(k));
  }
  const DecisionTask single = DecisionTask::Create({"only"}, {{0.2, 0.9}});
  EXPECT_EQ(BestResponse(single, 0.42), 0u);
}

TEST(DecisionTaskTest, RejectsBadPayoffs) {
  EXPECT_THROW(DecisionTask::Create({}, {}), InvalidArgumentError);
  EXPECT_THROW(DecisionTask::Create({"a"}, {{0.1, 1.2}}), InvalidArgumentError);
  EXPECT_THROW(DecisionTask::Create({"a", "b"}, {{0.1, 0.2}}),
               InvalidArgumentError);
  EXPECT_THROW(QuadraticTask(0.0), InvalidArgumentError);
}

TEST(ExpectedPayoffTest, Examples) {
  const double eps = 0.05;
  const EmpiricalJoint j = ConstantHalf(eps);
  const DecisionTask t = MatchingTask();
  EXPECT_NEAR(ExpectedPayoff(j, t, BestResponsePolicy(t, j)), 0.5 - eps, 1e-12);
  EXPECT_NEAR(ExpectedPayoff(j, t, Policy{{0.5, BestResponse(t, 0.5 + eps)}}),
              0.5 + eps, 1e-12);

  const DecisionTask flat =
      DecisionTask::Create({"a", "b"}, {{0.3, 0.3}, {0.3, 0.3}});
  EXPECT_NEAR(ExpectedPayoff(j, flat, Policy{{0.5, 1}}), 0.3, 1e-15);
  EXPECT_THROW(ExpectedPayoff(j, t, Policy{{0.4, 0}}), InvalidArgumentError);
  EXPECT_THROW(ExpectedPayoff(j, t, Policy{{0.5, 7}}), InvalidArgumentError);
}

TEST(CfdlTest, Examples) {
  const double eps = 0.05;
  EXPECT_NEAR(Cfdl(ConstantHalf(eps), MatchingTask()), 2.0 * eps, 1e-12);
  EXPECT_NEAR(CfdlBregman(ConstantHalf(eps), MatchingTask()), 2.0 * eps, 1e-12);
  testing::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const EmpiricalJoint j = testing::RandomCalibratedJoint(rng, 8);
    const DecisionTask t = testing::RandomTask(rng, 5);
    EXPECT_NEAR(Cfdl(j, t), 0.0, 1e-12);
    EXPECT_NEAR(CfdlBregman(j, t), 0.0, 1e-12);
  }
}

TEST(CfdlTest, QuadraticTaskTracksSquaredEce2) {
  const double h = 1e-3;
  const DecisionTask t = QuadraticTask(h);
  testing::Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const EmpiricalJoint j = testing::RandomJoint(rng, 10);
    const double ece2 = EceQ(j, 2.0);
    EXPECT_NEAR(Cfdl(j, t), ece2 * ece2, 2.0 * h);
  }
}

TEST(CfdlTest, RoutesAgree) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const EmpiricalJoint j = testing::RandomJoint(rng, 10);
    const DecisionTask t = testing::RandomTask(rng, 5);
    const double cfdl = Cfdl(j, t);
    EXPECT_GE(cfdl, 0.0);
    EXPECT_NEAR(cfdl, CfdlBregman(j, t), 1e-9);
  }
}

TEST(CfdlTest, AffineAndScaleInvariance) {
  testing::Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const EmpiricalJoint j = testing::RandomJoint(rng, 8);
    const DecisionTask t = testing::RandomTask(rng, 4);
    const double c0 = testing::Uniform(rng, 0.0, 0.5);
    const double c1 = testing::Uniform(rng, 0.0, 0.5);
    const double scale = testing::Uniform(rng, 0.1, 1.0);
    std::vector<std::array<double, 2>> shifted;
    std::vector<std::array<double, 2>> scaled;
    for (const auto& u : t.payoff()) {
      shifted.push_back({u[0] / 2.0 + c0, u[1] / 2.0 + c1});
      scaled.push_back({u[0] * scale, u[1] * scale});
    }
    const DecisionTask half = DecisionTask::Create(
        t.actions(), [&] {
          std::vector<std::array<double, 2>> h;
          for (const auto& u : t.payoff()) h.push_back({u[0] / 2.0, u[1] / 2.0});
          return h;
        }());
    EXPECT_NEAR(Cfdl(j, DecisionTask::Create(t.actions(), shifted)),
                Cfdl(j, half), 1e-12);
    EXPECT_NEAR(Cfdl(j, DecisionTask::Create(t.actions(), scaled)),
                scale * Cfdl(j, t), 1e-12);
  }
}

TEST(TrustworthinessTest, BestResponseIsOptimalWhenCalibrated) {
  testing::Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const EmpiricalJoint j = testing::RandomCalibratedJoint(rng, 10);
    const DecisionTask t = testing::RandomTask(rng, 4);
    const double best = ExpectedPayoff(j, t, BestResponsePolicy(t, j));
    EXPECT_LE(testing::ExhaustivePolicyPayoff(j, t), best + 1e-12);
  }
}

TEST(BregmanTest, Examples) {
  const ConvexPotential q = ConvexPotential::Quadratic();
  EXPECT_NEAR(Bregman(q, 0.8, 0.5), 0.09, 1e-15);
  EXPECT_EQ(Bregman(q, 0.3, 0.3), 0.0);
  const ConvexPotential kl = ConvexPotential::NegativeEntropy();
  EXPECT_EQ(Bregman(kl, 0.5, 0.5), 0.0);
  EXPECT_NEAR(Bregman(kl, 0.5, 0.25),
              0.5 * std::log(0.5 / 0.25) + 0.5 * std::log(0.5 / 0.75), 1e-12);
  EXPECT_NEAR(Bregman(kl, 0.0, 0.5), std::log(2.0), 1e-12);
  EXPECT_THROW(Bregman(q, 1.5, 0.5), InvalidArgumentError);
  EXPECT_THROW(Bregman(q, 0.5, -0.1), InvalidArgumentError);
}

TEST(BregmanTest, NonNegative) {
  testing::Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const DecisionTask t = testing::RandomTask(rng, 5);
    const ConvexPotential phi = TaskPotential(t);
    const double a = testing::Uniform(rng);
    const double b = testing::Uniform(rng);
    EXPECT_GE(Bregman(phi, a, b), -1e-12);
    EXPECT_GE(Bregman(ConvexPotential::NegativeEntropy(), a, b), -1e-12);
  }
}

TEST(TaskPotentialTest, Examples) {
  const ConvexPotential phi = TaskPotential(MatchingTask());
  for (double v : {0.0, 0.2, 0.5, 0.7, 1.0}) {
    EXPECT_NEAR(phi.Value(v), std::max(v, 1.0 - v), 1e-15);
  }
  ASSERT_TRUE(phi.piecewise().has_value());
  ASSERT_EQ(phi.piecewise()->breakpoints.size(), 1u);
  EXPECT_NEAR(phi.piecewise()->breakpoints[0], 0.5, 1e-15);
  EXPECT_EQ(phi.piecewise()->slopes, (std::vector<double>{-1.0, 1.0}));

  const ConvexPotential flat =
      TaskPotential(DecisionTask::Create({"a"}, {{0.2, 0.7}}));
  EXPECT_NEAR(Bregman(flat, 0.9, 0.1), 0.0, 1e-15);

  for (double vstar : {0.1, 0.3, 0.5, 0.8}) {
    const ConvexPotential t = TaskPotential(ThresholdTask(vstar));
    // phi - |v - vstar| / 2 is affine.
    auto residual = [&](double v) {
      return t.Value(v) - 0.5 * std::abs(v - vstar);
    };
    const double slope = residual(1.0) - residual(0.0);
    for (double v : {0.05, 0.25, 0.5, 0.75, 0.95}) {
      EXPECT_NEAR(residual(v), residual(0.0) + slope * v, 1e-12);
    }
  }
}

TEST(VDivergenceTest, Examples) {
  const double eps = 0.05;
  const double vstar = 0.5 + 1e-12;
  EXPECT_NEAR(VDivergence(vstar, 0.5 + eps, 0.5), 2.0 * (0.5 + eps - vstar),
              1e-15);
  EXPECT_EQ(VDivergence(0.5, 0.5 + eps, 0.5), 0.0);  // half-open
  EXPECT_EQ(VDivergence(0.3, 0.4, 0.4), 0.0);
  EXPECT_EQ(VDivergence(0.9, 0.2, 0.6), 0.0);
  EXPECT_NEAR(VDivergence(0.6, 0.2, 0.6), 0.8, 1e-15);
  EXPECT_NEAR(VDivergence(0.2, 0.6, 0.1), 0.8, 1e-15);
}

TEST(VDivergenceTest, IsTheBregmanOfTheV) {
  testing::Rng rng(27);
  for (int trial = 0; trial < 500; ++trial) {
    const double vstar = testing::RandomValue(rng);
    const double a = testing::RandomValue(rng);
    const double b = testing::RandomValue(rng);
    EXPECT_NEAR(VDivergence(vstar, a, b),
                Bregman(ConvexPotential::VShaped(vstar), a, b), 1e-12);
  }
}

TEST(CdlTest, Examples) {
  EXPECT_NEAR(Cdl(ConstantHalf(0.05)), 0.1, 1e-12);
  testing::Rng rng(28);
  EXPECT_NEAR(Cdl(testing::RandomCalibratedJoint(rng, 10)), 0.0, 1e-12);
  const double eps = 0.05;
  const double cdl = Cdl(Project(CdlExample2(eps, 1000).instance));
  EXPECT_GE(cdl, eps * eps - 1e-12);
  EXPECT_LE(cdl, eps * eps / (1.0 - eps) + 2.0 * eps / 1000.0);
}

TEST(CdlTest, MatchesScan) {
  testing::Rng rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const EmpiricalJoint j = testing::RandomJoint(rng, 10);
    const double cdl = Cdl(j);
    const double scan = testing::ScannedCdl(j);
    EXPECT_GE(cdl, scan - 1e-12);
    EXPECT_LE(cdl, scan + 1e-9);
  }
}

TEST(CdlTest, RelationChain) {
  testing::Rng rng(30);
  for (int trial = 0; trial < 1000; ++trial) {
    const EmpiricalJoint j = testing::RandomJoint(rng, 10);
    const double ece = Ece(j);
    const double ece2 = EceQ(j, 2.0);
    const double cdl = Cdl(j);
    EXPECT_LE(ece * ece, ece2 * ece2 + 1e-9);
    EXPECT_LE(ece2 * ece2, cdl + 1e-9);
    EXPECT_LE(cdl, 2.0 * ece + 1e-9);
    EXPECT_LE(2.0 * ece, 2.0 * ece2 + 1e-9);
  }
}

TEST(CdlTest, DominatesBoundedPotentials) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const EmpiricalJoint j = testing::RandomJoint(rng, 10);
    std::vector<std::pair<double, double>> lines;
    const std::size_t k = testing::UniformInt(rng, 1, 6);
    for (std::size_t i = 0; i < k; ++i) {
      lines.emplace_back(testing::Uniform(rng, -1.0, 1.0),
                         testing::Uniform(rng, -1.0, 1.0));
    }
    const ConvexPotential phi = ConvexPotential::UpperEnvelope(lines);
    EXPECT_LE(ExpectedBregman(j, phi), Cdl(j) + 1e-9);
    const double vstar = testing::Uniform(rng);
    EXPECT_GE(Cdl(j), Cfdl(j, ThresholdTask(vstar)) - 1e-9);
  }
}

}  // namespace
}  // namespace calib
