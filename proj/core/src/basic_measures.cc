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

#include "calib/basic_measures.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "calib/errors.h"

namespace calib {

double Ece(const EmpiricalJoint& joint) {
  double sum = 0.0;
  for (const LevelSet& level : joint.level_sets()) {
    sum += level.mass * std::abs(level.Mean() - level.v);
  }
  return std::min(sum, 1.0);
}

double EceQ(const EmpiricalJoint& joint, double q) {
  if (!(q >= 1.0)) throw InvalidArgumentError("ECE_q requires q >= 1");
  if (q == 1.0) return Ece(joint);
  double sum = 0.0;
  for (const LevelSet& level : joint.level_sets()) {
    sum += level.mass * std::pow(std::abs(level.Mean() - level.v), q);
  }
  return std::min(std::pow(sum, 1.0 / q), 1.0);
}

double TvCharacterization(const EmpiricalJoint& joint) {
  // Both distributions live on {(v, y)} for the distinct v of the joint.
  std::map<std::pair<double, int>, double> observed;
  std::map<std::pair<double, int>, double> surrogate;
  for (const Atom& atom : joint.atoms()) {
    observed[{atom.v, atom.y}] += atom.mass;
    surrogate[{atom.v, 1}] += atom.mass * atom.v;
    surrogate[{atom.v, 0}] += atom.mass * (1.0 - atom.v);
  }
  double sum = 0.0;
  for (const auto& [point, mass] : surrogate) {
    auto it = observed.find(point);
    const double seen = it == observed.end() ? 0.0 : it->second;
    sum += std::abs(seen - mass);
  }
  return 0.5 * sum;
}

double BinnedEce(const EmpiricalJoint& joint, unsigned b) {
  if (b == 0) throw InvalidArgumentError("bucket count must be positive");
  const double buckets = static_cast<double>(b);
  return Ece(PostProcess(joint, [&](double v) {
    const double j = std::min(std::floor(v * buckets), buckets - 1.0);
    return (j + 0.5) / buckets;
  }));
}

}  // namespace calib
