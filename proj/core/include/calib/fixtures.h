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

#ifndef CALIB_FIXTURES_H_
#define CALIB_FIXTURES_H_

// Small instances with known measure values, used as golden regressions.

#include <cstddef>
#include <string>
#include <vector>

#include "calib/empirical.h"

namespace calib {

// Where an expected value comes from: quoted from the literature, worked out
// by hand, or true by definition.
enum class Provenance { kPublished, kDerived, kDefinitional };

const char* ProvenanceName(Provenance source);

enum class Comparison { kEqual, kAtMost, kAtLeast };

const char* ComparisonName(Comparison comparison);

struct Expectation {
  std::string measure;  // a report measure id such as "ece" or "cdl"
  double value = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::kEqual;
  Provenance source = Provenance::kDerived;

  // |actual - value| <= tolerance, actual <= value + tolerance or
  // actual >= value - tolerance.
  bool Holds(double actual) const;
};

struct Fixture {
  std::string name;
  FiniteInstance instance;
  std::vector<Expectation> expected;
};

// Two equally likely points predicted 1/2 - eps and 1/2 + eps whose labels
// are 0 and 1. Requires 0 < eps < 1/2.
Fixture TwoPoint(double eps);

// Three instances over delta = eps / (1 - 2 eps), for 0 < eps < 1/4:
//   p1     - four points, predictions 1/2 +- delta, not calibrated;
//   p2     - the same points with a calibrated predictor, 2 eps delta away;
//   coarse - two points realizing the same joint as p1 with distance delta.
struct QuadraticGapFixtures {
  Fixture p1;
  Fixture p2;
  Fixture coarse;
};
QuadraticGapFixtures QuadraticGap(double eps);

// The constant predictor 1/2 when the label mean is 1/2 + eps; 0 < eps < 1/10.
Fixture CdlExample1(double eps);

// Identity predictor on n midpoints of equal cells of [eps, 1], each with
// label mean x - eps. Requires 0 < eps < 1/10 and n >= 100. The expected CDL
// bound carries a discretization slack of 2 eps / n.
Fixture CdlExample2(double eps, std::size_t n);

}  // namespace calib

#endif  // CALIB_FIXTURES_H_
