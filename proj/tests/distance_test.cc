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

#include "calib/distance.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "calib/basic_measures.h"
#include "calib/errors.h"
#include "calib/fixtures.h"
#include "calib/weighted.h"
#include "test_util.h"

namespace calib {
namespace {

EmpiricalJoint TwoPointJoint(double eps) {
  return Project(TwoPoint(eps).instance);
}

TEST(IntervalPartitionTest, CreateAndLookup) {
  const IntervalPartition b = IntervalPartition::Create({0.0, 0.3, 0.5, 1.0});
  EXPECT_EQ(b.num_intervals(), 3u);
  EXPECT_NEAR(b.Width(), 0.5, 1e-15);
  EXPECT_EQ(b.IntervalIndex(0.0), 0u);
  EXPECT_EQ(b.IntervalIndex(0.3), 1u);
  EXPECT_EQ(b.IntervalIndex(0.49), 1u);
  EXPECT_EQ(b.IntervalIndex(1.0), 2u);
  EXPECT_THROW(IntervalPartition::Create({0.0, 0.5}), InvalidArgumentError);
  EXPECT_THROW(IntervalPartition::Create({0.0, 0.6, 0.6, 1.0}),
               InvalidArgumentError);
  EXPECT_THROW(IntervalPartition::Create({0.1, 1.0}), InvalidArgumentError);
  EXPECT_THROW(IntervalPartition::Uniform(0), InvalidArgumentError);
  EXPECT_EQ(IntervalPartition::Uniform(4).IntervalIndex(0.75), 3u);
}

TEST(CePartitionTest, Examples) {
  testing::Rng rng(41);
  const IntervalPartition whole = IntervalPartition::Uniform(1);
  for (int trial = 0; trial < 50; ++trial) {
    const EmpiricalJoint j = testing::RandomJoint(rng, 10);
    EXPECT_NEAR(CePartition(j, whole),
                std::abs(j.MeanLabel() - j.MeanPrediction()), 1e-12);
  }
  const double eps = 0.1;
  EXPECT_NEAR(CePartition(TwoPointJoint(eps), whole), 0.0, 1e-15);
  EXPECT_NEAR(CePartition(TwoPointJoint(eps), IntervalPartition::Uniform(2)),
              0.5 - eps, 1e-15);
  EXPECT_NEAR(IntcePartition(TwoPointJoint(eps), whole), 1.0, 1e-15);
  const IntervalPartition tight =
      IntervalPartition::Create({0.0, 0.4, 0.6 + 1e-9, 1.0});
  EXPECT_NEAR(IntcePartition(TwoPointJoint(eps), tight), 0.4, 1e-12);

  const EmpiricalJoint calibrated =
      EmpiricalJoint::FromAtoms({{0.25, 0, 0.375}, {0.25, 1, 0.125},
                                 {0.75, 1, 0.375}, {0.75, 0, 0.125}});
  EXPECT_NEAR(IntcePartition(calibrated, IntervalPartition::Uniform(2)), 0.5,
              1e-15);
}

TEST(CanonicalPredictorTest, Examples) {
  const double eps = 0.1;
  const CanonicalPredictor whole =
      CanonicalPredictor::Fit(TwoPointJoint(eps), IntervalPartition::Uniform(1));
  EXPECT_NEAR(whole(0.4), 0.5, 1e-15);
  EXPECT_NEAR(whole(0.6), 0.5, 1e-15);
  EXPECT_NEAR(whole.Distance(TwoPointJoint(eps)), eps, 1e-15);

  const CanonicalPredictor split =
      CanonicalPredictor::Fit(TwoPointJoint(eps), IntervalPartition::Uniform(4));
  EXPECT_NEAR(split(0.4), 0.0, 1e-15);
  EXPECT_NEAR(split(0.6), 1.0, 1e-15);
  EXPECT_NEAR(split(0.1), 0.125, 1e-15);  // empty interval -> midpoint
}

TEST(CanonicalPredictorTest, CalibratedAndBoundedByIntce) {
  testing::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const EmpiricalJoint j = testing::RandomJoint(rng, 10);
    const IntervalPartition b =
        IntervalPartition::Uniform(testing::UniformInt(rng, 1, 12));
    const CanonicalPredictor q = CanonicalPredictor::Fit(j, b);
    EXPECT_NEAR(Ece(q.Apply(j)), 0.0, 1e-12);
    EXPECT_LE(q.Distance(j), IntcePartition(j, b) + 1e-12);
  }
}

TEST(IntceOptTest, Examples) {
  const IntceOptResult r = IntceOpt(TwoPointJoint(0.1), 1000);
  EXPECT_NEAR(r.value, 0.2, 2e-3);
  EXPECT_FALSE(r.unseparated);
  EXPECT_NEAR(IntcePartition(TwoPointJoint(0.1), r.partition), r.value, 1e-12);
  EXPECT_THROW(IntceOpt(TwoPointJoint(0.1), 1), InvalidArgumentError);

  const EmpiricalJoint crowded =
      EmpiricalJoint::FromAtoms({{0.31, 0, 0.5}, {0.32, 1, 0.5}});
  EXPECT_TRUE(IntceOpt(crowded, 10).unseparated);
}

TEST(IntceOptTest, MatchesExhaustiveGridSearch) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const EmpiricalJoint j = testing::RandomJoint(rng, 8);
    const std::size_t g = testing::UniformInt(rng, 2, 12);
    const IntceOptResult r = IntceOpt(j, g);
    EXPECT_NEAR(r.value, testing::BruteGridIntce(j, g), 1e-12);
    EXPECT_NEAR(IntcePartition(j, r.partition), r.value, 1e-12);
  }
}

TEST(RandomGridTest, PartitionShapeAndDeterminism) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    const IntervalPartition b = RandomGridPartition(0.3, seed);
    const auto& bp = b.breakpoints();
    EXPECT_LE(bp[1], 0.3 + 1e-15);
    for (std::size_t i = 2; i + 1 < bp.size(); ++i) {
      EXPECT_NEAR(bp[i] - bp[i - 1], 0.3, 1e-12);
    }
    EXPECT_EQ(RandomGridPartition(0.3, seed).breakpoints(), bp);
  }
  testing::Rng rng(44);
  const EmpiricalJoint calibrated = testing::RandomCalibratedJoint(rng, 6);
  EXPECT_LE(RandomGridIntce(calibrated, 0.2, 5), 0.2 + 1e-12);
  const EmpiricalJoint j = testing::RandomJoint(rng, 6);
  EXPECT_LE(RandomGridIntce(j, 1.0, 5),
            1.0 + std::abs(j.MeanLabel() - j.MeanPrediction()) + 1e-12);
  EXPECT_THROW(RandomGridIntce(j, 0.0, 1), InvalidArgumentError);
  EXPECT_THROW(RandomGridIntce(j, 1.5, 1), InvalidArgumentError);
}

TEST(RandomGridTest, AverageWithinSquareRootBound) {
  testing::Rng rng(45);
  int checked = 0;
  while (checked < 20) {
    const FiniteInstance inst = testing::RandomInstance(rng, 7);
    const double delta = DceOracle(inst);
    if (delta < 1e-9) continue;
    const double beta = std::min(1.0, std::sqrt(2.0 * delta));
    const EmpiricalJoint j = Project(inst);
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      total += RandomGridIntce(j, beta, seed);
    }
    EXPECT_LE(total / 100.0, 4.0 * std::sqrt(delta) + 1e-9);
    ++checked;
  }
}

TEST(DceOracleTest, Examples) {
  EXPECT_NEAR(DceOracle(TwoPoint(0.1).instance), 0.1, 1e-12);
  const double eps = 0.1;
  const double delta = eps / (1.0 - 2.0 * eps);
  const QuadraticGapFixtures q = QuadraticGap(eps);
  EXPECT_NEAR(DceOracle(q.p1.instance), 2.0 * eps * delta, 1e-12);
  EXPECT_NEAR(DceOracle(q.p2.instance), 0.0, 1e-12);
  EXPECT_NEAR(DceOracle(q.coarse.instance), delta, 1e-12);
  EXPECT_NEAR(DceUpperOracle(Project(q.p1.instance)), delta, 1e-12);
  testing::Rng rng(46);
  EXPECT_NEAR(DceUpperOracle(testing::RandomCalibratedJoint(rng, 8)), 0.0,
              1e-12);
}

TEST(DceOracleTest, MatchesAssignmentEnumeration) {
  testing::Rng rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const FiniteInstance inst = testing::RandomInstance(rng, 6);
    EXPECT_NEAR(DceOracle(inst), testing::AssignmentDce(inst), 1e-12);
  }
}

TEST(DceOracleTest, SizeLimits) {
  std::vector<InstancePoint> points;
  for (int i = 0; i < 13; ++i) {
    points.push_back({std::to_string(i), 1.0 / 13.0, i / 13.0, 0.5});
  }
  const FiniteInstance big = FiniteInstance::Create(points);
  EXPECT_THROW(DceOracle(big), OracleSizeError);
  EXPECT_THROW(DceOracle(big, {.max_items = 14}), InvalidArgumentError);
  EXPECT_THROW(DceUpperOracle(Project(big)), OracleSizeError);
}

TEST(DistanceTest, Sandwiches) {
  testing::Rng rng(48);
  const std::size_t g = 1000;
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteInstance inst = testing::RandomInstance(rng, 9);
    const EmpiricalJoint j = Project(inst);
    const double dce = DceOracle(inst);
    const double upper = DceUpperOracle(j);
    EXPECT_LE(SmoothCe(j) / 2.0, dce + 1e-9);
    EXPECT_LE(dce, upper + 1e-12);
    EXPECT_LE(upper, 4.0 * std::sqrt(dce) + 1e-9);
    EXPECT_LE(upper, IntceOpt(j, g).value + 2.0 / g);
    EXPECT_LE(upper, Ece(j) + 1e-12);
  }
}

TEST(DistanceTest, OracleIsLipschitzInPredictions) {
  testing::Rng rng(49);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteInstance inst = testing::RandomInstance(rng, 7);
    const double eta = testing::Uniform(rng, 0.0, 0.1);
    std::vector<InstancePoint> moved = inst.points();
    for (auto& p : moved) {
      p.pred = std::clamp(p.pred + testing::Uniform(rng, -eta, eta), 0.0, 1.0);
    }
    EXPECT_LE(std::abs(DceOracle(inst) -
                       DceOracle(FiniteInstance::Create(moved))),
              eta + 1e-12);
  }
}

}  // namespace
}  // namespace calib
