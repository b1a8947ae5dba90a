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

#include "calib/online.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "calib/basic_measures.h"
#include "calib/decision.h"
#include "calib/errors.h"
#include "calib/weighted.h"
#include "text.h"

namespace calib {
namespace {

double UnitDraw(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void RequireUnit(double v, const std::string& what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InvalidArgumentError(what + " must lie in [0,1]");
  }
}

double MeasureOf(const EmpiricalJoint& joint, std::string_view measure) {
  if (measure == "ece") return Ece(joint);
  if (measure == "ece2") return EceQ(joint, 2.0);
  if (measure == "smce") return SmoothCe(joint);
  if (measure == "cdl") return Cdl(joint);
  if (measure.substr(0, 7) == "binned:") {
    const auto b = internal::ParseUnsigned(measure.substr(7));
    if (!b || *b == 0) {
      throw InvalidArgumentError("bad bucket count in '" +
                                 std::string(measure) + "'");
    }
    return BinnedEce(joint, static_cast<unsigned>(*b));
  }
  throw UnknownMeasureError("unknown sequence measure '" +
                            std::string(measure) + "'");
}

std::pair<std::string_view, std::string_view> SplitSpec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return {spec, {}};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

double SpecNumber(std::string_view text, std::string_view spec) {
  const auto value = internal::ParseDouble(text);
  if (!value) {
    throw InvalidArgumentError("bad number in strategy '" + std::string(spec) +
                               "'");
  }
  return *value;
}

}  // namespace

Transcript Transcript::Create(std::vector<Round> rounds) {
  if (rounds.empty()) throw InvalidArgumentError("transcript is empty");
  for (const Round& round : rounds) {
    RequireUnit(round.p, "prediction");
    if (round.y != 0 && round.y != 1) {
      throw InvalidArgumentError("label must be 0 or 1");
    }
  }
  Transcript transcript;
  transcript.rounds_ = std::move(rounds);
  return transcript;
}

EmpiricalJoint Transcript::Joint(std::size_t length) const {
  if (length == 0 || length > rounds_.size()) length = rounds_.size();
  std::vector<Sample> samples;
  samples.reserve(length);
  for (std::size_t t = 0; t < length; ++t) {
    samples.push_back({rounds_[t].p, rounds_[t].y});
  }
  return FromSamples(samples);
}

ConstantForecaster::ConstantForecaster(double c) : c_(c) {
  RequireUnit(c, "constant forecast");
}

std::string ConstantForecaster::Name() const {
  return "constant:" + internal::ShortNumber(c_);
}

RunningMeanForecaster::RunningMeanForecaster(double a, double b)
    : a_(a), b_(b) {
  if (!(a >= 0.0 && b >= 0.0 && a + b > 0.0) || !std::isfinite(a + b)) {
    throw InvalidArgumentError("running mean prior needs a, b >= 0, a + b > 0");
  }
}

std::string RunningMeanForecaster::Name() const {
  return "running_mean:" + internal::ShortNumber(a_) + "," +
         internal::ShortNumber(b_);
}

double RunningMeanForecaster::Predict(std::span<const Round> history,
                                      Rng&) const {
  double ones = 0.0;
  for (const Round& round : history) ones += round.y;
  return (a_ + ones) / (a_ + b_ + static_cast<double>(history.size()));
}

GridRandomForecaster::GridRandomForecaster(unsigned m) : m_(m) {
  if (m == 0) throw InvalidArgumentError("grid size must be positive");
}

std::string GridRandomForecaster::Name() const {
  return "grid_random:" + std::to_string(m_);
}

double GridRandomForecaster::Predict(std::span<const Round> history,
                                     Rng& rng) const {
  const double scaled = mean_.Predict(history, rng) * m_;
  const double lower = std::floor(scaled);
  const double up = UnitDraw(rng) < scaled - lower ? 1.0 : 0.0;
  return std::min(lower + up, static_cast<double>(m_)) / m_;
}

ConstantAdversary::ConstantAdversary(int y) : y_(y) {
  if (y != 0 && y != 1) throw InvalidArgumentError("label must be 0 or 1");
}

std::string ConstantAdversary::Name() const { return y_ ? "ones" : "zeros"; }

BernoulliAdversary::BernoulliAdversary(double q) : q_(q) {
  RequireUnit(q, "Bernoulli parameter");
}

std::string BernoulliAdversary::Name() const {
  return "bernoulli:" + internal::ShortNumber(q_);
}

int BernoulliAdversary::Label(std::span<const Round>, Rng& rng) const {
  return UnitDraw(rng) < q_ ? 1 : 0;
}

ThresholdAdversary::ThresholdAdversary(
    std::shared_ptr<const Forecaster> forecaster)
    : forecaster_(std::move(forecaster)) {
  if (!forecaster_) throw InvalidArgumentError("threshold needs a forecaster");
  if (forecaster_->Randomized()) {
    throw InvalidArgumentError("threshold adversary cannot replay randomized "
                               "forecaster '" + forecaster_->Name() + "'");
  }
}

int ThresholdAdversary::Label(std::span<const Round> history, Rng&) const {
  Rng unused;
  return forecaster_->Predict(history, unused) < 0.5 ? 1 : 0;
}

Transcript Run(const Forecaster& forecaster, const Adversary& adversary,
               std::size_t rounds, std::uint64_t seed) {
  if (rounds == 0) throw InvalidArgumentError("need at least one round");
  const auto lo = static_cast<std::uint32_t>(seed);
  const auto hi = static_cast<std::uint32_t>(seed >> 32);
  std::seed_seq forecaster_seed{lo, hi, 1u};
  std::seed_seq adversary_seed{lo, hi, 2u};
  Rng forecaster_rng(forecaster_seed);
  Rng adversary_rng(adversary_seed);

  std::vector<Round> history;
  history.reserve(rounds);
  for (std::size_t t = 0; t < rounds; ++t) {
    const double p = forecaster.Predict(history, forecaster_rng);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidArgumentError("forecaster '" + forecaster.Name() +
                                 "' emitted " + std::to_string(p));
    }
    const int y = adversary.Label(history, adversary_rng);
    if (y != 0 && y != 1) {
      throw InvalidArgumentError("adversary '" + adversary.Name() +
                                 "' emitted label " + std::to_string(y));
    }
    history.push_back({p, y});
  }
  return Transcript::Create(std::move(history));
}

double SequenceMeasure(const Transcript& transcript, std::string_view measure) {
  return static_cast<double>(transcript.size()) *
         MeasureOf(transcript.Joint(), measure);
}

std::vector<std::pair<std::size_t, double>> PrefixCurve(
    const Transcript& transcript, std::string_view measure,
    std::size_t num_points) {
  const std::size_t total = transcript.size();
  num_points = std::clamp<std::size_t>(num_points, 1, total);
  std::vector<std::pair<std::size_t, double>> curve;
  curve.reserve(num_points);
  for (std::size_t k = 1; k <= num_points; ++k) {
    const std::size_t length = (k * total + num_points - 1) / num_points;
    curve.emplace_back(length, static_cast<double>(length) *
                                   MeasureOf(transcript.Joint(length), measure));
  }
  return curve;
}

std::shared_ptr<const Forecaster> MakeForecaster(std::string_view spec) {
  const auto [kind, args] = SplitSpec(spec);
  if (kind == "constant") {
    return std::make_shared<ConstantForecaster>(SpecNumber(args, spec));
  }
  if (kind == "running_mean") {
    if (args.empty()) return std::make_shared<RunningMeanForecaster>(1.0, 1.0);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      throw InvalidArgumentError("running_mean takes <a>,<b>");
    }
    return std::make_shared<RunningMeanForecaster>(
        SpecNumber(args.substr(0, comma), spec),
        SpecNumber(args.substr(comma + 1), spec));
  }
  if (kind == "grid_random") {
    const auto m = internal::ParseUnsigned(args);
    if (!m || *m == 0 || *m > 1'000'000) {
      throw InvalidArgumentError("grid_random takes a grid size in [1, 1e6]");
    }
    return std::make_shared<GridRandomForecaster>(static_cast<unsigned>(*m));
  }
  throw InvalidArgumentError("unknown forecaster '" + std::string(spec) + "'");
}

std::shared_ptr<const Adversary> MakeAdversary(
    std::string_view spec, std::shared_ptr<const Forecaster> forecaster) {
  const auto [kind, args] = SplitSpec(spec);
  if (kind == "ones" && args.empty()) return std::make_shared<ConstantAdversary>(1);
  if (kind == "zeros" && args.empty()) return std::make_shared<ConstantAdversary>(0);
  if (kind == "bernoulli") {
    return std::make_shared<BernoulliAdversary>(SpecNumber(args, spec));
  }
  if (kind == "threshold" && args.empty()) {
    return std::make_shared<ThresholdAdversary>(std::move(forecaster));
  }
  throw InvalidArgumentError("unknown adversary '" + std::string(spec) + "'");
}

}  // namespace calib
