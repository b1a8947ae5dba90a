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

#ifndef CALIB_DISTANCE_H_
#define CALIB_DISTANCE_H_

// Interval calibration error and exhaustive oracles for the distance from a
// predictor to the nearest perfectly calibrated one.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "calib/empirical.h"

namespace calib {

// Ordered partition of [0,1] into [b_{j-1}, b_j), the last interval closed.
class IntervalPartition {
 public:
  // Requires 0 = b_0 < b_1 < ... < b_k = 1; throws InvalidArgumentError
  // otherwise.
  static IntervalPartition Create(std::vector<double> breakpoints);
  // k equal intervals with breakpoints j / k.
  static IntervalPartition Uniform(std::size_t k);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  std::size_t num_intervals() const { return breakpoints_.size() - 1; }
  // Longest interval.
  double Width() const;
  // Interval holding v, for v in [0,1].
  std::size_t IntervalIndex(double v) const;

 private:
  IntervalPartition() = default;
  std::vector<double> breakpoints_;
};

// sum over intervals of |E[(y - p) 1{p in I_j}]|.
double CePartition(const EmpiricalJoint& joint, const IntervalPartition& b);

// CePartition + Width.
double IntcePartition(const EmpiricalJoint& joint, const IntervalPartition& b);

// Post-processing that sends every prediction in I_j to E[y | p in I_j].
// Intervals without mass map to their midpoint.
struct CanonicalPredictor {
  IntervalPartition partition;
  std::vector<double> values;  // one per interval

  static CanonicalPredictor Fit(const EmpiricalJoint& joint,
                                const IntervalPartition& b);

  double operator()(double v) const {
    return values[partition.IntervalIndex(v)];
  }
  // The post-processed joint, which is perfectly calibrated.
  EmpiricalJoint Apply(const EmpiricalJoint& joint) const;
  // E|p - q(p)|.
  double Distance(const EmpiricalJoint& joint) const;
};

struct IntceOptResult {
  // Minimum of IntcePartition over partitions with breakpoints on the grid
  // {j / g}. The unrestricted minimum lies in [value - 2/g, value].
  double value = 0.0;
  IntervalPartition partition = IntervalPartition::Uniform(1);
  // True when two distinct predictions share a grid cell, so no grid
  // partition can separate them.
  bool unseparated = false;
};

// Throws InvalidArgumentError for g < 2.
IntceOptResult IntceOpt(const EmpiricalJoint& joint, std::size_t g);

// Partition [0, b), [b, b + beta), ... with b uniform on [0, beta], drawn
// from a generator seeded with `seed`; returns its IntcePartition. Throws
// InvalidArgumentError unless 0 < beta <= 1.
double RandomGridIntce(const EmpiricalJoint& joint, double beta,
                       std::uint64_t seed);
// The partition RandomGridIntce evaluates.
IntervalPartition RandomGridPartition(double beta, std::uint64_t seed);

// Enumeration sizes above kOracleDefaultCap need an explicit opt-in and
// nothing above kOracleHardCap is accepted.
inline constexpr std::size_t kOracleDefaultCap = 12;
inline constexpr std::size_t kOracleHardCap = 13;

struct OracleOptions {
  std::size_t max_items = kOracleDefaultCap;
};

// min over perfectly calibrated q on the instance's points of E|p - q|, by
// enumerating every set partition of the points; each block takes the
// mass-weighted mean of cond_mean. Throws OracleSizeError above the cap and
// InvalidArgumentError for a cap above kOracleHardCap.
double DceOracle(const FiniteInstance& instance,
                 const OracleOptions& options = {});

// Same minimization over set partitions of the distinct prediction values,
// i.e. over post-processings of p that are perfectly calibrated.
double DceUpperOracle(const EmpiricalJoint& joint,
                      const OracleOptions& options = {});

}  // namespace calib

#endif  // CALIB_DISTANCE_H_
