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

#ifndef CALIB_LP_H_
#define CALIB_LP_H_

// Small dense two-phase simplex solver. Intended for the few-hundred-variable
// programs that arise from transport and Lipschitz-weight problems; it uses
// Bland's rule throughout, so it never cycles but is not fast.

#include <cstddef>
#include <vector>

namespace calib::lp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<double> coefficients;  // one per variable
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// Optimizes objective . x subject to the constraints and x >= 0.
struct Problem {
  std::size_t num_variables = 0;
  std::vector<double> objective;
  std::vector<Constraint> constraints;
  bool maximize = true;

  void AddConstraint(std::vector<double> coefficients, Relation relation,
                     double rhs);
};

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct Solution {
  Status status = Status::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
};

struct Options {
  double pivot_tolerance = 1e-11;
  double feasibility_tolerance = 1e-9;
  std::size_t max_iterations = 1'000'000;
};

Solution Solve(const Problem& problem, const Options& options = {});

}  // namespace calib::lp

#endif  // CALIB_LP_H_
