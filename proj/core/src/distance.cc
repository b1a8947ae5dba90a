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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "calib/errors.h"

namespace calib {
namespace {

double GridPoint(std::size_t j, std::size_t g) {
  return static_cast<double>(j) / static_cast<double>(g);
}

// A unit of an oracle enumeration: its mass, prediction and mass times
// conditional label mean.
struct OracleItem {
  double mass;
  double pred;
  double label_mass;
};

class SetPartitionSearch {
 public:
  explicit SetPartitionSearch(std::vector<OracleItem> items)
      : items_(std::move(items)),
        block_(items_.size(), 0),
        block_mass_(items_.size()),
        block_label_(items_.size()) {}

  double Run() {
    best_ = std::numeric_limits<double>::infinity();
    if (items_.empty()) return 0.0;
    Assign(1, 1);
    return best_;
  }

 private:
  // Restricted growth strings: item i joins one of the first `used` blocks
  // or opens a new one. Item 0 is always in block 0.
  void Assign(std::size_t i, std::size_t used) {
    if (i == items_.size()) {
      Score(used);
      return;
    }
    for (std::size_t b = 0; b <= used && b < items_.size(); ++b) {
      block_[i] = b;
      Assign(i + 1, std::max(used, b + 1));
    }
  }

  void Score(std::size_t used) {
    std::fill_n(block_mass_.begin(), used, 0.0);
    std::fill_n(block_label_.begin(), used, 0.0);
    for (std::size_t i = 0; i < items_.size(); ++i) {
      block_mass_[block_[i]] += items_[i].mass;
      block_label_[block_[i]] += items_[i].label_mass;
    }
    double cost = 0.0;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const double m = block_mass_[block_[i]];
      if (m <= 0.0) continue;
      const double value = std::clamp(block_label_[block_[i]] / m, 0.0, 1.0);
      cost += items_[i].mass * std::abs(items_[i].pred - value);
    }
    best_ = std::min(best_, cost);
  }

  std::vector<OracleItem> items_;
  std::vector<std::size_t> block_;
  std::vector<double> block_mass_;
  std::vector<double> block_label_;
  double best_ = 0.0;
};

void CheckOracleSize(std::size_t n, const OracleOptions& options,
                     const char* what) {
  if (options.max_items > kOracleHardCap) {
    throw InvalidArgumentError("oracle cap may not exceed " +
                               std::to_string(kOracleHardCap));
  }
  if (n > options.max_items) {
    throw OracleSizeError(std::string(what) + ": " + std::to_string(n) +
                          " items exceed the oracle cap of " +
                          std::to_string(options.max_items));
  }
}

}  // namespace

IntervalPartition IntervalPartition::Create(std::vector<double> breakpoints) {
  if (breakpoints.size() < 2 || breakpoints.front() != 0.0 ||
      breakpoints.back() != 1.0) {
    throw InvalidArgumentError("breakpoints must run from 0 to 1");
  }
  for (std::size_t j = 1; j < breakpoints.size(); ++j) {
    if (!(breakpoints[j] > breakpoints[j - 1])) {
      throw InvalidArgumentError("breakpoints must be strictly increasing");
    }
  }
  IntervalPartition partition;
  partition.breakpoints_ = std::move(breakpoints);
  return partition;
}

IntervalPartition IntervalPartition::Uniform(std::size_t k) {
  if (k == 0) throw InvalidArgumentError("need at least one interval");
  std::vector<double> breakpoints(k + 1);
  for (std::size_t j = 0; j <= k; ++j) breakpoints[j] = GridPoint(j, k);
  return Create(std::move(breakpoints));
}

double IntervalPartition::Width() const {
  double width = 0.0;
  for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
    width = std::max(width, breakpoints_[j] - breakpoints_[j - 1]);
  }
  return width;
}

std::size_t IntervalPartition::IntervalIndex(double v) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), v);
  const auto index = static_cast<std::size_t>(it - breakpoints_.begin());
  return std::clamp<std::size_t>(index, 1, num_intervals()) - 1;
}

double CePartition(const EmpiricalJoint& joint, const IntervalPartition& b) {
  std::vector<double> residual(b.num_intervals(), 0.0);
  for (const LevelSet& level : joint.level_sets()) {
    residual[b.IntervalIndex(level.v)] += level.Residual();
  }
  double total = 0.0;
  for (double r : residual) total += std::abs(r);
  return total;
}

double IntcePartition(const EmpiricalJoint& joint, const IntervalPartition& b) {
  return CePartition(joint, b) + b.Width();
}

CanonicalPredictor CanonicalPredictor::Fit(const EmpiricalJoint& joint,
                                           const IntervalPartition& b) {
  std::vector<double> mass(b.num_intervals(), 0.0);
  std::vector<double> label(b.num_intervals(), 0.0);
  for (const LevelSet& level : joint.level_sets()) {
    const std::size_t j = b.IntervalIndex(level.v);
    mass[j] += level.mass;
    label[j] += level.label_mass;
  }
  std::vector<double> values(b.num_intervals());
  const auto& bp = b.breakpoints();
  for (std::size_t j = 0; j < values.size(); ++j) {
    values[j] = mass[j] > 0.0 ? std::clamp(label[j] / mass[j], 0.0, 1.0)
                              : 0.5 * (bp[j] + bp[j + 1]);
  }
  return {b, std::move(values)};
}

EmpiricalJoint CanonicalPredictor::Apply(const EmpiricalJoint& joint) const {
  return PostProcess(joint, [this](double v) { return (*this)(v); });
}

double CanonicalPredictor::Distance(const EmpiricalJoint& joint) const {
  double total = 0.0;
  for (const LevelSet& level : joint.level_sets()) {
    total += level.mass * std::abs(level.v - (*this)(level.v));
  }
  return total;
}

IntceOptResult IntceOpt(const EmpiricalJoint& joint, std::size_t g) {
  if (g < 2) throw InvalidArgumentError("grid resolution must be >= 2");
  const IntervalPartition grid = IntervalPartition::Uniform(g);

  // Occupied cells in increasing order with their residual mass. Values in
  // one cell can never be split by a grid partition.
  std::vector<std::size_t> cells;
  std::vector<double> prefix = {0.0};
  IntceOptResult result;
  for (const LevelSet& level : joint.level_sets()) {
    const std::size_t cell = grid.IntervalIndex(level.v);
    if (!cells.empty() && cells.back() == cell) {
      prefix.back() += level.Residual();
      result.unseparated = true;
    } else {
      cells.push_back(cell);
      prefix.push_back(prefix.back() + level.Residual());
    }
  }
  const std::size_t n = cells.size();

  // Grouping occupied cells a..b into one interval needs c_b - c_a + 1 grid
  // cells; only those spans can change the optimal CE under a width cap.
  std::vector<bool> is_span(g + 1, false);
  is_span[1] = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) is_span[cells[b] - cells[a] + 1] = true;
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_parent;
  std::vector<double> dp(n + 1);
  std::vector<std::size_t> parent(n + 1);
  for (std::size_t t = 1; t <= g; ++t) {
    const double cap = GridPoint(t, g);
    if (cap >= best) break;
    if (!is_span[t]) continue;
    // dp[b]: least CE of the first b occupied cells, grouped into runs that
    // each fit in t grid cells.
    dp[0] = 0.0;
    for (std::size_t b = 1; b <= n; ++b) {
      dp[b] = std::numeric_limits<double>::infinity();
      for (std::size_t a = b; a >= 1; --a) {
        if (cells[b - 1] - cells[a - 1] + 1 > t) break;
        const double candidate = dp[a - 1] + std::abs(prefix[b] - prefix[a - 1]);
        if (candidate < dp[b]) {
          dp[b] = candidate;
          parent[b] = a - 1;
        }
      }
    }
    if (dp[n] + cap < best) {
      best = dp[n] + cap;
      best_parent = parent;
    }
  }

  // Grid points strictly inside a grouped run are dropped; every other grid
  // point stays a breakpoint.
  std::vector<bool> keep(g + 1, true);
  for (std::size_t b = n; b > 0;) {
    const std::size_t a = best_parent[b];
    for (std::size_t j = cells[a] + 1; j <= cells[b - 1]; ++j) keep[j] = false;
    b = a;
  }
  std::vector<double> breakpoints;
  for (std::size_t j = 0; j <= g; ++j) {
    if (keep[j]) breakpoints.push_back(GridPoint(j, g));
  }
  result.partition = IntervalPartition::Create(std::move(breakpoints));
  result.value = IntcePartition(joint, result.partition);
  return result;
}

IntervalPartition RandomGridPartition(double beta, std::uint64_t seed) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw InvalidArgumentError("beta must lie in (0,1]");
  }
  // 53 high bits of a 64-bit Mersenne twister: identical on every platform.
  std::mt19937_64 rng(seed);
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const double first = u * beta;
  std::vector<double> breakpoints = {0.0};
  if (first > 0.0) breakpoints.push_back(first);
  for (std::size_t k = 1;; ++k) {
    const double x = first + static_cast<double>(k) * beta;
    if (x >= 1.0) break;
    breakpoints.push_back(x);
  }
  breakpoints.push_back(1.0);
  return IntervalPartition::Create(std::move(breakpoints));
}

double RandomGridIntce(const EmpiricalJoint& joint, double beta,
                       std::uint64_t seed) {
  return IntcePartition(joint, RandomGridPartition(beta, seed));
}

double DceOracle(const FiniteInstance& instance, const OracleOptions& options) {
  CheckOracleSize(instance.size(), options, "distance oracle");
  std::vector<OracleItem> items;
  items.reserve(instance.size());
  for (const InstancePoint& point : instance.points()) {
    items.push_back({point.mass, point.pred, point.mass * point.cond_mean});
  }
  return SetPartitionSearch(std::move(items)).Run();
}

double DceUpperOracle(const EmpiricalJoint& joint,
                      const OracleOptions& options) {
  CheckOracleSize(joint.num_values(), options, "upper distance oracle");
  std::vector<OracleItem> items;
  items.reserve(joint.num_values());
  for (const LevelSet& level : joint.level_sets()) {
    items.push_back({level.mass, level.v, level.label_mass});
  }
  return SetPartitionSearch(std::move(items)).Run();
}

}  // namespace calib
