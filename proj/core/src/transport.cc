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

// Earthmover distance between a joint and its Bernoulli(v) surrogate.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "calib/lp.h"
#include "calib/weighted.h"

namespace calib {
namespace {

// Convex piecewise-linear function on the real line. slopes[0] applies left
// of xs[0], slopes[i] between xs[i-1] and xs[i], slopes.back() right of
// xs.back(); y0 is the value at xs[0]. Slopes are stored rather than vertex
// values so that nearly coincident breakpoints stay well conditioned.
struct ConvexPwl {
  std::vector<double> xs;
  std::vector<double> slopes;
  double y0 = 0.0;

  double ValueAt(std::size_t i) const {
    double y = y0;
    for (std::size_t j = 1; j <= i; ++j) y += slopes[j] * (xs[j] - xs[j - 1]);
    return y;
  }

  double Eval(double x) const {
    if (x <= xs.front()) return y0 + slopes.front() * (x - xs.front());
    double y = y0;
    for (std::size_t j = 1; j < xs.size(); ++j) {
      if (x <= xs[j]) return y + slopes[j] * (x - xs[j - 1]);
      y += slopes[j] * (xs[j] - xs[j - 1]);
    }
    return y + slopes.back() * (x - xs.back());
  }

  // Adds weight * |x|.
  void AddAbs(double weight) {
    auto pos = std::lower_bound(xs.begin(), xs.end(), 0.0);
    std::size_t k = static_cast<std::size_t>(pos - xs.begin());
    if (pos == xs.end() || *pos != 0.0) {
      if (k == 0) y0 += slopes[0] * (0.0 - xs[0]);
      xs.insert(xs.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
      slopes.insert(slopes.begin() + static_cast<std::ptrdiff_t>(k),
                    slopes[k]);
    }
    // xs[k] == 0 now; segments 0..k lie left of zero.
    y0 += weight * std::abs(xs[0]);
    for (std::size_t j = 0; j < slopes.size(); ++j) {
      slopes[j] += j <= k ? -weight : weight;
    }
  }

  // Infimal convolution with |x|: clips every slope into [-1, 1].
  void ClipSlopes() {
    std::size_t lo = 0;
    while (lo < xs.size() && slopes[lo + 1] < -1.0) ++lo;
    std::size_t hi = xs.size() - 1;
    while (hi > 0 && slopes[hi] > 1.0) --hi;
    if (lo >= xs.size() || hi < lo) {
      throw std::logic_error("ladder flow value function lost convexity");
    }
    const double new_y0 = ValueAt(lo);
    std::vector<double> new_xs(xs.begin() + static_cast<std::ptrdiff_t>(lo),
                               xs.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    std::vector<double> new_slopes;
    new_slopes.reserve(new_xs.size() + 1);
    new_slopes.push_back(std::max(slopes[lo], -1.0));
    for (std::size_t j = lo + 1; j <= hi; ++j) new_slopes.push_back(slopes[j]);
    new_slopes.push_back(std::min(slopes[hi + 1], 1.0));
    xs = std::move(new_xs);
    slopes = std::move(new_slopes);
    y0 = new_y0;
  }

  void Shift(double delta) {
    for (double& x : xs) x += delta;
  }
};

// The label coordinate contributes 1 to any move between rails, so the metric
// is the path metric of a ladder whose rungs sit at the support values. Both
// joints put the same mass on each prediction value, hence the bottom-rail
// flow is minus the top-rail flow f and
//   EMD = min over f of sum_i |r_i + f_{i-1} - f_i| + 2 sum_i gap_i |f_i|
// with f_0 = f_m = 0 and r_i the residual of level i.
double LadderFlow(const EmpiricalJoint& joint) {
  const auto& levels = joint.level_sets();
  ConvexPwl cost{{levels[0].Residual()}, {-1.0, 1.0}, 0.0};
  for (std::size_t i = 1; i < levels.size(); ++i) {
    cost.AddAbs(2.0 * (levels[i].v - levels[i - 1].v));
    cost.ClipSlopes();
    cost.Shift(levels[i].Residual());
  }
  return std::max(cost.Eval(0.0), 0.0);
}

double TransportLp(const EmpiricalJoint& joint) {
  // Only the excess of one measure over the other moves. Node 2i is
  // (v_i, 0), node 2i + 1 is (v_i, 1); the surplus there is -r_i and r_i.
  const auto& levels = joint.level_sets();
  std::vector<std::pair<std::size_t, double>> sources;
  std::vector<std::pair<std::size_t, double>> sinks;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double r = levels[i].Residual();
    if (r > 0.0) {
      sources.emplace_back(2 * i + 1, r);
      sinks.emplace_back(2 * i, r);
    } else if (r < 0.0) {
      sources.emplace_back(2 * i, -r);
      sinks.emplace_back(2 * i + 1, -r);
    }
  }
  if (sources.empty()) return 0.0;

  auto distance = [&](std::size_t a, std::size_t b) {
    return std::abs(levels[a / 2].v - levels[b / 2].v) +
           ((a % 2) != (b % 2) ? 1.0 : 0.0);
  };
  const std::size_t ns = sources.size();
  const std::size_t nt = sinks.size();
  lp::Problem problem;
  problem.maximize = false;
  problem.num_variables = ns * nt;
  problem.objective.resize(ns * nt);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t t = 0; t < nt; ++t) {
      problem.objective[s * nt + t] = distance(sources[s].first, sinks[t].first);
    }
  }
  for (std::size_t s = 0; s < ns; ++s) {
    std::vector<double> row(ns * nt, 0.0);
    for (std::size_t t = 0; t < nt; ++t) row[s * nt + t] = 1.0;
    problem.AddConstraint(std::move(row), lp::Relation::kEqual,
                          sources[s].second);
  }
  for (std::size_t t = 0; t < nt; ++t) {
    std::vector<double> row(ns * nt, 0.0);
    for (std::size_t s = 0; s < ns; ++s) row[s * nt + t] = 1.0;
    problem.AddConstraint(std::move(row), lp::Relation::kEqual,
                          sinks[t].second);
  }
  const lp::Solution solution = lp::Solve(problem);
  if (solution.status != lp::Status::kOptimal) {
    throw std::runtime_error("transport program did not converge");
  }
  return std::max(solution.objective, 0.0);
}

}  // namespace

double EmdJoints(const EmpiricalJoint& joint, EmdMethod method) {
  switch (method) {
    case EmdMethod::kTransportLp:
      return TransportLp(joint);
    case EmdMethod::kLadderFlow:
      return LadderFlow(joint);
    case EmdMethod::kAuto:
      break;
  }
  return joint.num_values() <= kTransportLpMaxValues ? TransportLp(joint)
                                                      : LadderFlow(joint);
}

}  // namespace calib
