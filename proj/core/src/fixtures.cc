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

#include "calib/fixtures.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "calib/errors.h"

namespace calib {
namespace {

void RequireOpen(double eps, double upper, const char* fixture) {
  if (!(eps > 0.0 && eps < upper)) {
    throw InvalidArgumentError(std::string(fixture) + ": eps must lie in (0, " +
                               std::to_string(upper) + ")");
  }
}

Expectation Equal(std::string measure, double value, double tolerance,
                  Provenance source) {
  return {std::move(measure), value, tolerance, Comparison::kEqual, source};
}

}  // namespace

const char* ProvenanceName(Provenance source) {
  switch (source) {
    case Provenance::kPublished:
      return "published";
    case Provenance::kDerived:
      return "derived";
    case Provenance::kDefinitional:
      return "definitional";
  }
  return "derived";
}

const char* ComparisonName(Comparison comparison) {
  switch (comparison) {
    case Comparison::kEqual:
      return "equal";
    case Comparison::kAtMost:
      return "at_most";
    case Comparison::kAtLeast:
      return "at_least";
  }
  return "equal";
}

bool Expectation::Holds(double actual) const {
  switch (comparison) {
    case Comparison::kEqual:
      return std::abs(actual - value) <= tolerance;
    case Comparison::kAtMost:
      return actual <= value + tolerance;
    case Comparison::kAtLeast:
      return actual >= value - tolerance;
  }
  return false;
}

Fixture TwoPoint(double eps) {
  RequireOpen(eps, 0.5, "two_point");
  Fixture f{"two_point",
            FiniteInstance::Create({{"a", 0.5, 0.5 - eps, 0.0},
                                    {"b", 0.5, 0.5 + eps, 1.0}}),
            {}};
  f.expected = {
      Equal("ece", 0.5 - eps, 1e-12, Provenance::kPublished),
      Equal("tv", 0.5 - eps, 1e-12, Provenance::kPublished),
      Equal("smce", eps * (1.0 - 2.0 * eps) / 2.0, 1e-9, Provenance::kDerived),
      Equal("emd", (0.5 - eps) * std::min(2.0 * eps, 1.0), 1e-9,
            Provenance::kDerived),
      Equal("dce", std::min(eps, 0.5 - eps), 1e-12, Provenance::kDerived),
  };
  return f;
}

QuadraticGapFixtures QuadraticGap(double eps) {
  RequireOpen(eps, 0.25, "quadratic_gap");
  const double delta = eps / (1.0 - 2.0 * eps);
  const double lo = 0.5 - delta;
  const double hi = 0.5 + delta;
  QuadraticGapFixtures out{
      {"quadratic_gap_p1",
       FiniteInstance::Create({{"00", 0.5 - eps, lo, lo},
                               {"01", eps, lo, 1.0},
                               {"10", eps, hi, 0.0},
                               {"11", 0.5 - eps, hi, hi}}),
       {}},
      {"quadratic_gap_p2",
       FiniteInstance::Create({{"00", 0.5 - eps, lo, lo},
                               {"01", eps, 0.5, 1.0},
                               {"10", eps, 0.5, 0.0},
                               {"11", 0.5 - eps, hi, hi}}),
       {}},
      {"quadratic_gap_coarse",
       FiniteInstance::Create({{"lo", 0.5, lo, 0.5}, {"hi", 0.5, hi, 0.5}}),
       {}},
  };
  out.p1.expected = {
      Equal("dce", 2.0 * eps * delta, 1e-12, Provenance::kPublished),
      Equal("ece", delta, 1e-12, Provenance::kDerived),
      Equal("dce_upper", delta, 1e-12, Provenance::kDerived),
  };
  out.p2.expected = {
      Equal("ece", 0.0, 1e-12, Provenance::kPublished),
      Equal("dce", 0.0, 1e-12, Provenance::kDefinitional),
  };
  out.coarse.expected = {
      Equal("dce", delta, 1e-12, Provenance::kPublished),
      Equal("ece", delta, 1e-12, Provenance::kDerived),
  };
  return out;
}

Fixture CdlExample1(double eps) {
  RequireOpen(eps, 0.1, "cdl_example_1");
  Fixture f{"cdl_example_1",
            FiniteInstance::Create({{"x", 1.0, 0.5, 0.5 + eps}}), {}};
  f.expected = {
      Equal("ece2", eps, 1e-12, Provenance::kPublished),
      Equal("cdl", 2.0 * eps, 1e-9, Provenance::kPublished),
      Equal("cfdl:matching", 2.0 * eps, 1e-12, Provenance::kPublished),
      Equal("ece", eps, 1e-12, Provenance::kDerived),
  };
  return f;
}

Fixture CdlExample2(double eps, std::size_t n) {
  RequireOpen(eps, 0.1, "cdl_example_2");
  if (n < 100) throw InvalidArgumentError("cdl_example_2: n must be >= 100");
  std::vector<InstancePoint> points;
  points.reserve(n);
  const double cell = (1.0 - eps) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = eps + (static_cast<double>(i) + 0.5) * cell;
    points.push_back({std::to_string(i), 1.0 / static_cast<double>(n), x,
                      x - eps});
  }
  Fixture f{"cdl_example_2", FiniteInstance::Create(std::move(points)), {}};
  f.expected = {
      Equal("ece", eps, 1e-12, Provenance::kPublished),
      {"cdl", eps * eps / (1.0 - eps), 2.0 * eps / static_cast<double>(n),
       Comparison::kAtMost, Provenance::kPublished},
      {"cdl", eps * eps, 1e-9, Comparison::kAtLeast, Provenance::kPublished},
  };
  return f;
}

}  // namespace calib
