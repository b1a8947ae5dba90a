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

#ifndef CALIB_DECISION_H_
#define CALIB_DECISION_H_

// Decision-theoretic calibration: best responses to predicted probabilities,
// the payoff lost by trusting a miscalibrated predictor (CFDL) and its
// supremum over bounded tasks (CDL).

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "calib/empirical.h"

namespace calib {

// Finite action set with payoffs u(a, y) in [0,1] for y in {0,1}.
class DecisionTask {
 public:
  // payoff[a] = {u(a,0), u(a,1)}. Throws InvalidArgumentError on an empty
  // action set, a size mismatch or a payoff outside [0,1].
  static DecisionTask Create(std::vector<std::string> actions,
                             std::vector<std::array<double, 2>> payoff);

  std::size_t size() const { return payoff_.size(); }
  const std::vector<std::string>& actions() const { return actions_; }
  const std::vector<std::array<double, 2>>& payoff() const { return payoff_; }
  double Payoff(std::size_t action, int y) const { return payoff_[action][y]; }
  // E over y ~ Bernoulli(v) of u(action, y).
  double ExpectedPayoff(std::size_t action, double v) const {
    return v * payoff_[action][1] + (1.0 - v) * payoff_[action][0];
  }

 private:
  DecisionTask() = default;
  std::vector<std::string> actions_;
  std::vector<std::array<double, 2>> payoff_;
};

// Two actions, payoff 1 iff the action matches the outcome.
DecisionTask MatchingTask();

// Actions on the grid {0, h, 2h, ..., 1} with u(a, y) = 1 - (a - y)^2. The
// best response to v is the grid point nearest v, so CFDL reproduces the
// squared l2 calibration error up to O(h).
DecisionTask QuadraticTask(double resolution = 1e-3);

// Two actions whose potential is |v - vstar| / 2 plus an affine function.
DecisionTask ThresholdTask(double vstar);

// argmax over actions of the expected payoff under Bernoulli(v); exact ties go
// to the lowest index.
std::size_t BestResponse(const DecisionTask& task, double v);

// Prediction value -> action.
using Policy = std::map<double, std::size_t>;

// Best response to every prediction value of `joint`.
Policy BestResponsePolicy(const DecisionTask& task, const EmpiricalJoint& joint);

// sum over atoms of mass * u(policy(v), y). Throws InvalidArgumentError when
// the policy misses a support value or names an unknown action.
double ExpectedPayoff(const EmpiricalJoint& joint, const DecisionTask& task,
                      const Policy& policy);

// E[u(sigma(p-hat), y)] - E[u(sigma(p), y)], summed atom by atom.
double Cfdl(const EmpiricalJoint& joint, const DecisionTask& task);

// Convex function on [0,1] with a chosen subgradient. Piecewise-linear
// potentials also carry their breakpoints and segment slopes.
class ConvexPotential {
 public:
  struct Piecewise {
    std::vector<double> breakpoints;  // interior, increasing
    std::vector<double> slopes;       // breakpoints.size() + 1, nondecreasing
  };

  ConvexPotential(std::function<double(double)> value,
                  std::function<double(double)> subgradient,
                  std::optional<Piecewise> piecewise = std::nullopt)
      : value_(std::move(value)),
        subgradient_(std::move(subgradient)),
        piecewise_(std::move(piecewise)) {}

  // v^2.
  static ConvexPotential Quadratic();
  // v ln v + (1 - v) ln(1 - v); its divergence is the Bernoulli KL. The
  // subgradient is infinite at 0 and 1.
  static ConvexPotential NegativeEntropy();
  // |v - vstar| with subgradient +1 at vstar.
  static ConvexPotential VShaped(double vstar);
  // Upper envelope of lines (slope, intercept). At a kink the subgradient is
  // the slope of the lowest-index line attaining the maximum.
  static ConvexPotential UpperEnvelope(
      std::vector<std::pair<double, double>> lines);

  double Value(double v) const { return value_(v); }
  double Subgradient(double v) const { return subgradient_(v); }
  const std::optional<Piecewise>& piecewise() const { return piecewise_; }

 private:
  std::function<double(double)> value_;
  std::function<double(double)> subgradient_;
  std::optional<Piecewise> piecewise_;
};

// D(mu_star || mu) = phi(mu_star) - phi(mu) - phi'(mu) (mu_star - mu); zero
// when the arguments coincide. Throws InvalidArgumentError outside [0,1].
double Bregman(const ConvexPotential& phi, double mu_star, double mu);

// phi(v) = E over y ~ Bernoulli(v) of u(sigma(v), y), with subgradient
// u(sigma(v), 1) - u(sigma(v), 0) for the tie-broken best response sigma.
ConvexPotential TaskPotential(const DecisionTask& task);

// sum over level sets of mass * D(p-hat(v) || v).
double ExpectedBregman(const EmpiricalJoint& joint, const ConvexPotential& phi);

// CFDL through the divergence of the task's potential.
double CfdlBregman(const EmpiricalJoint& joint, const DecisionTask& task);

// Divergence of the V-shaped potential at vstar:
// 2 |v1 - vstar| when vstar lies in (v1, v2] or (v2, v1], else 0.
double VDivergence(double vstar, double v1, double v2);

// sup over vstar in [0,1] of sum over level sets of
// mass * VDivergence(vstar, p-hat(v), v). The objective is piecewise linear
// in vstar; every piece is evaluated at both ends, which covers the suprema
// that are only approached from one side.
double Cdl(const EmpiricalJoint& joint);

}  // namespace calib

#endif  // CALIB_DECISION_H_
