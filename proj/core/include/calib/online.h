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

#ifndef CALIB_ONLINE_H_
#define CALIB_ONLINE_H_

// Sequential forecasting harness. In round t the forecaster and the adversary
// both see the history of rounds 1..t-1 only; the forecaster emits p_t, the
// adversary emits y_t. Each strategy draws from its own seeded stream.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "calib/empirical.h"

namespace calib {

struct Round {
  double p = 0.0;
  int y = 0;

  friend bool operator==(const Round&, const Round&) = default;
};

class Transcript {
 public:
  // Throws InvalidArgumentError when empty or out of range.
  static Transcript Create(std::vector<Round> rounds);

  const std::vector<Round>& rounds() const { return rounds_; }
  std::size_t size() const { return rounds_.size(); }
  // Uniform distribution over the first `length` rounds (all by default).
  EmpiricalJoint Joint(std::size_t length = 0) const;

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  Transcript() = default;
  std::vector<Round> rounds_;
};

using Rng = std::mt19937_64;

class Forecaster {
 public:
  virtual ~Forecaster() = default;
  virtual std::string Name() const = 0;
  // Deterministic forecasters ignore `rng`; only they can be replayed by a
  // threshold adversary.
  virtual bool Randomized() const = 0;
  virtual double Predict(std::span<const Round> history, Rng& rng) const = 0;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string Name() const = 0;
  virtual int Label(std::span<const Round> history, Rng& rng) const = 0;
};

// Always c.
class ConstantForecaster : public Forecaster {
 public:
  explicit ConstantForecaster(double c);
  std::string Name() const override;
  bool Randomized() const override { return false; }
  double Predict(std::span<const Round>, Rng&) const override { return c_; }

 private:
  double c_;
};

// (a + sum of past labels) / (a + b + t - 1).
class RunningMeanForecaster : public Forecaster {
 public:
  RunningMeanForecaster(double a, double b);
  std::string Name() const override;
  bool Randomized() const override { return false; }
  double Predict(std::span<const Round> history, Rng& rng) const override;

 private:
  double a_;
  double b_;
};

// The running mean with prior (1, 1), randomly rounded to a neighbouring
// point of the grid {0, 1/m, ..., 1} so that its expectation is unchanged.
class GridRandomForecaster : public Forecaster {
 public:
  explicit GridRandomForecaster(unsigned m);
  std::string Name() const override;
  bool Randomized() const override { return true; }
  double Predict(std::span<const Round> history, Rng& rng) const override;

 private:
  unsigned m_;
  RunningMeanForecaster mean_{1.0, 1.0};
};

// Always y.
class ConstantAdversary : public Adversary {
 public:
  explicit ConstantAdversary(int y);
  std::string Name() const override;
  int Label(std::span<const Round>, Rng&) const override { return y_; }

 private:
  int y_;
};

// Independent Bernoulli(q) labels.
class BernoulliAdversary : public Adversary {
 public:
  explicit BernoulliAdversary(double q);
  std::string Name() const override;
  int Label(std::span<const Round> history, Rng& rng) const override;

 private:
  double q_;
};

// Replays a deterministic forecaster on the history to learn p_t in advance
// and answers y_t = 1 iff p_t < 1/2.
class ThresholdAdversary : public Adversary {
 public:
  // Throws InvalidArgumentError if the forecaster is randomized.
  explicit ThresholdAdversary(std::shared_ptr<const Forecaster> forecaster);
  std::string Name() const override { return "threshold"; }
  int Label(std::span<const Round> history, Rng& rng) const override;

 private:
  std::shared_ptr<const Forecaster> forecaster_;
};

// Plays T rounds. The forecaster's stream is seeded from {seed, 1} and the
// adversary's from {seed, 2}. Throws InvalidArgumentError for T == 0 or when
// a strategy emits an out-of-range value.
Transcript Run(const Forecaster& forecaster, const Adversary& adversary,
               std::size_t rounds, std::uint64_t seed);

// T times a measure of the uniform joint over the rounds. `measure` is one of
// ece, ece2, smce, cdl or binned:<b>; anything else throws
// UnknownMeasureError.
double SequenceMeasure(const Transcript& transcript, std::string_view measure);

// SequenceMeasure on `num_points` prefixes of increasing length ending at T.
std::vector<std::pair<std::size_t, double>> PrefixCurve(
    const Transcript& transcript, std::string_view measure,
    std::size_t num_points);

// Strategy specs: constant:<c>, running_mean[:<a>,<b>], grid_random:<m>;
// ones, zeros, bernoulli:<q>, threshold. Throw InvalidArgumentError on a
// malformed spec.
std::shared_ptr<const Forecaster> MakeForecaster(std::string_view spec);
std::shared_ptr<const Adversary> MakeAdversary(
    std::string_view spec, std::shared_ptr<const Forecaster> forecaster);

}  // namespace calib

#endif  // CALIB_ONLINE_H_
