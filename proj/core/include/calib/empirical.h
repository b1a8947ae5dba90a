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

#ifndef CALIB_EMPIRICAL_H_
#define CALIB_EMPIRICAL_H_

// Finitely supported data model shared by every measure: the joint
// distribution of (prediction, label), finite feature spaces that realize it,
// and the recalibration map.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace calib {

// Bookkeeping tolerance for total mass after normalization.
inline constexpr double kMassTolerance = 1e-12;
// Explicit masses that drift further than this from 1 are rejected rather
// than silently renormalized.
inline constexpr double kMassDriftLimit = 1e-9;

// One support point of a joint distribution over [0,1] x {0,1}.
struct Atom {
  double v = 0.0;
  int y = 0;
  double mass = 0.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

// All atoms sharing one prediction value, aggregated.
struct LevelSet {
  double v = 0.0;
  double mass = 0.0;        // Pr[p = v]
  double label_mass = 0.0;  // Pr[p = v, y = 1]

  // E[y | p = v], clamped to [0,1] against rounding.
  double Mean() const;
  // E[(y - p) 1{p = v}].
  double Residual() const { return label_mass - mass * v; }
};

// A labelled prediction, optionally weighted at ingestion time.
struct Sample {
  double prediction = 0.0;
  int label = 0;
};

// Canonical finitely supported distribution of (p(x), y). Atoms are sorted
// by (v, y), exact duplicates are merged, zero-mass atoms are dropped and the
// masses sum to one. Values that differ in the last bit are kept apart.
class EmpiricalJoint {
 public:
  // Validates ranges, merges and normalizes. Throws InvalidArgumentError when
  // a value is out of range, a mass is negative, nothing has positive mass,
  // or the total drifts from 1 by more than kMassDriftLimit.
  static EmpiricalJoint FromAtoms(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  // One entry per distinct prediction value, in increasing order of v.
  const std::vector<LevelSet>& level_sets() const { return levels_; }
  std::size_t num_values() const { return levels_.size(); }

  double MeanLabel() const;
  double MeanPrediction() const;

  friend bool operator==(const EmpiricalJoint& a, const EmpiricalJoint& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  EmpiricalJoint() = default;
  static EmpiricalJoint Canonicalize(std::vector<Atom> atoms);

  std::vector<Atom> atoms_;
  std::vector<LevelSet> levels_;
};

// Builds the empirical joint of a sample. Without weights every sample gets
// mass 1/n; with weights, masses are proportional to them.
EmpiricalJoint FromSamples(std::span<const Sample> samples,
                           std::span<const double> weights = {});

// A point of a finite feature space: its probability, the prediction made on
// it and the Bayes-optimal conditional label mean.
struct InstancePoint {
  std::string id;
  double mass = 0.0;
  double pred = 0.0;
  double cond_mean = 0.0;
};

class FiniteInstance {
 public:
  // Throws InvalidArgumentError on empty input, out-of-range values or a total
  // mass further than kMassDriftLimit from one. Masses are renormalized.
  static FiniteInstance Create(std::vector<InstancePoint> points);

  const std::vector<InstancePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  FiniteInstance() = default;
  std::vector<InstancePoint> points_;
};

// p-hat: maps every distinct prediction value to E[y | p = v].
class RecalibrationMap {
 public:
  // `entries` are (v, mean) pairs with strictly increasing v.
  explicit RecalibrationMap(std::vector<std::pair<double, double>> entries);

  std::optional<double> Find(double v) const;
  // Throws InvalidArgumentError when v is not a prediction value of the
  // source joint.
  double operator()(double v) const;

  const std::vector<std::pair<double, double>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<double, double>> entries_;
};

RecalibrationMap Recalibrate(const EmpiricalJoint& joint);

// Splits each point's mass into (pred, 1) and (pred, 0) in proportion
// cond_mean : 1 - cond_mean.
EmpiricalJoint Project(const FiniteInstance& instance);

// Applies a post-processing kappa to every prediction and re-merges.
EmpiricalJoint PostProcess(const EmpiricalJoint& joint,
                           const std::function<double(double)>& kappa);

}  // namespace calib

#endif  // CALIB_EMPIRICAL_H_
