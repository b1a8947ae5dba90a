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

#include "calib/empirical.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "calib/errors.h"

namespace calib {
namespace {

bool InUnitInterval(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

void CheckAtom(const Atom& atom) {
  if (!InUnitInterval(atom.v)) {
    throw InvalidArgumentError("prediction outside [0,1]: " +
                               std::to_string(atom.v));
  }
  if (atom.y != 0 && atom.y != 1) {
    throw InvalidArgumentError("label outside {0,1}: " +
                               std::to_string(atom.y));
  }
  if (!std::isfinite(atom.mass) || atom.mass < 0.0) {
    throw InvalidArgumentError("negative or non-finite mass");
  }
}

}  // namespace

double LevelSet::Mean() const {
  return std::clamp(label_mass / mass, 0.0, 1.0);
}

EmpiricalJoint EmpiricalJoint::FromAtoms(std::vector<Atom> atoms) {
  if (atoms.empty()) throw InvalidArgumentError("empty joint distribution");
  double total = 0.0;
  for (const Atom& atom : atoms) {
    CheckAtom(atom);
    total += atom.mass;
  }
  if (std::abs(total - 1.0) > kMassDriftLimit) {
    throw InvalidArgumentError("atom masses sum to " + std::to_string(total) +
                               ", expected 1");
  }
  return Canonicalize(std::move(atoms));
}

EmpiricalJoint EmpiricalJoint::Canonicalize(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    return a.v != b.v ? a.v < b.v : a.y < b.y;
  });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const Atom& atom : atoms) {
    if (atom.mass == 0.0) continue;
    if (!merged.empty() && merged.back().v == atom.v &&
        merged.back().y == atom.y) {
      merged.back().mass += atom.mass;
    } else {
      merged.push_back(atom);
    }
  }
  const double total = std::accumulate(
      merged.begin(), merged.end(), 0.0,
      [](double acc, const Atom& a) { return acc + a.mass; });
  if (merged.empty() || !(total > 0.0)) {
    throw InvalidArgumentError("no atom has positive mass");
  }

  EmpiricalJoint joint;
  for (Atom& atom : merged) atom.mass /= total;
  for (const Atom& atom : merged) {
    if (joint.levels_.empty() || joint.levels_.back().v != atom.v) {
      joint.levels_.push_back({atom.v, 0.0, 0.0});
    }
    joint.levels_.back().mass += atom.mass;
    if (atom.y == 1) joint.levels_.back().label_mass += atom.mass;
  }
  joint.atoms_ = std::move(merged);
  return joint;
}

double EmpiricalJoint::MeanLabel() const {
  double sum = 0.0;
  for (const Atom& atom : atoms_) sum += atom.mass * atom.y;
  return sum;
}

double EmpiricalJoint::MeanPrediction() const {
  double sum = 0.0;
  for (const Atom& atom : atoms_) sum += atom.mass * atom.v;
  return sum;
}

EmpiricalJoint FromSamples(std::span<const Sample> samples,
                           std::span<const double> weights) {
  if (samples.empty()) throw InvalidArgumentError("no samples");
  if (!weights.empty() && weights.size() != samples.size()) {
    throw InvalidArgumentError("weights and samples differ in length");
  }
  std::vector<Atom> atoms;
  atoms.reserve(samples.size());
  double total = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidArgumentError("negative weight at sample " +
                                 std::to_string(i));
    }
    Atom atom{samples[i].prediction, samples[i].label, w};
    CheckAtom(atom);
    atoms.push_back(atom);
    total += w;
  }
  if (!(total > 0.0)) throw InvalidArgumentError("all weights are zero");
  for (Atom& atom : atoms) atom.mass /= total;
  return EmpiricalJoint::FromAtoms(std::move(atoms));
}

FiniteInstance FiniteInstance::Create(std::vector<InstancePoint> points) {
  if (points.empty()) throw InvalidArgumentError("empty instance");
  double total = 0.0;
  for (const InstancePoint& point : points) {
    if (!std::isfinite(point.mass) || point.mass < 0.0) {
      throw InvalidArgumentError("negative mass at point '" + point.id + "'");
    }
    if (!InUnitInterval(point.pred) || !InUnitInterval(point.cond_mean)) {
      throw InvalidArgumentError("pred or cond_mean outside [0,1] at point '" +
                                 point.id + "'");
    }
    total += point.mass;
  }
  if (std::abs(total - 1.0) > kMassDriftLimit) {
    throw InvalidArgumentError("instance masses sum to " +
                               std::to_string(total) + ", expected 1");
  }
  for (InstancePoint& point : points) point.mass /= total;
  FiniteInstance instance;
  instance.points_ = std::move(points);
  return instance;
}

RecalibrationMap::RecalibrationMap(
    std::vector<std::pair<double, double>> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (!(entries_[i - 1].first < entries_[i].first)) {
      throw InvalidArgumentError("recalibration entries must be increasing");
    }
  }
}

std::optional<double> RecalibrationMap::Find(double v) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), v,
      [](const std::pair<double, double>& e, double x) { return e.first < x; });
  if (it == entries_.end() || it->first != v) return std::nullopt;
  return it->second;
}

double RecalibrationMap::operator()(double v) const {
  if (auto mean = Find(v)) return *mean;
  throw InvalidArgumentError("value " + std::to_string(v) +
                             " is not a prediction of the source joint");
}

RecalibrationMap Recalibrate(const EmpiricalJoint& joint) {
  std::vector<std::pair<double, double>> entries;
  entries.reserve(joint.num_values());
  for (const LevelSet& level : joint.level_sets()) {
    entries.emplace_back(level.v, level.Mean());
  }
  return RecalibrationMap(std::move(entries));
}

EmpiricalJoint Project(const FiniteInstance& instance) {
  std::vector<Atom> atoms;
  atoms.reserve(2 * instance.size());
  for (const InstancePoint& point : instance.points()) {
    atoms.push_back({point.pred, 1, point.mass * point.cond_mean});
    atoms.push_back({point.pred, 0, point.mass * (1.0 - point.cond_mean)});
  }
  return EmpiricalJoint::FromAtoms(std::move(atoms));
}

EmpiricalJoint PostProcess(const EmpiricalJoint& joint,
                           const std::function<double(double)>& kappa) {
  std::vector<Atom> atoms = joint.atoms();
  for (Atom& atom : atoms) atom.v = kappa(atom.v);
  return EmpiricalJoint::FromAtoms(std::move(atoms));
}

}  // namespace calib
