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

#include "calib/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "calib/errors.h"

namespace calib::lp {
namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * (cols + 1), 0.0), basis_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const {
    return cells_[r * (cols_ + 1) + c];
  }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t basis(std::size_t r) const { return basis_[r]; }

  void Pivot(std::size_t r, std::size_t c) {
    const double inv = 1.0 / at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) *= inv;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double factor = at(i, c);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= factor * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
};

// Primal simplex with Bland's rule, maximizing cost . x over the columns in
// `allowed`. The tableau must hold a primal feasible basis.
Status Optimize(Tableau& t, const std::vector<double>& cost,
                const std::vector<bool>& allowed, const Options& options,
                std::size_t& iterations) {
  std::vector<bool> is_basic(t.cols(), false);
  std::vector<double> reduced(t.cols());
  while (true) {
    if (iterations++ >= options.max_iterations) return Status::kIterationLimit;
    std::fill(is_basic.begin(), is_basic.end(), false);
    for (std::size_t r = 0; r < t.rows(); ++r) is_basic[t.basis(r)] = true;

    std::size_t entering = t.cols();
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (!allowed[c] || is_basic[c]) continue;
      double rc = cost[c];
      for (std::size_t r = 0; r < t.rows(); ++r) {
        const double a = t.at(r, c);
        if (a != 0.0) rc -= cost[t.basis(r)] * a;
      }
      if (rc > options.pivot_tolerance) {
        entering = c;
        break;
      }
    }
    if (entering == t.cols()) return Status::kOptimal;

    std::size_t leaving = t.rows();
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, entering);
      if (a <= options.pivot_tolerance) continue;
      const double ratio = std::max(t.rhs(r), 0.0) / a;
      if (ratio < best_ratio ||
          (ratio == best_ratio && t.basis(r) < t.basis(leaving))) {
        best_ratio = ratio;
        leaving = r;
      }
    }
    if (leaving == t.rows()) return Status::kUnbounded;
    t.Pivot(leaving, entering);
  }
}

}  // namespace

void Problem::AddConstraint(std::vector<double> coefficients, Relation relation,
                            double rhs) {
  constraints.push_back({std::move(coefficients), relation, rhs});
}

Solution Solve(const Problem& problem, const Options& options) {
  const std::size_t n = problem.num_variables;
  if (problem.objective.size() != n) {
    throw InvalidArgumentError("objective length differs from variable count");
  }
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const Constraint& c : problem.constraints) {
    if (c.coefficients.size() != n) {
      throw InvalidArgumentError("constraint length differs from variable count");
    }
    const bool flip = c.rhs < 0.0;
    Relation rel = c.relation;
    if (flip && rel != Relation::kEqual) {
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual
                                        : Relation::kLessEqual;
    }
    if (rel != Relation::kEqual) ++slack_count;
    if (rel != Relation::kLessEqual) ++artificial_count;
  }

  const std::size_t rows = problem.constraints.size();
  const std::size_t cols = n + slack_count + artificial_count;
  const std::size_t first_artificial = n + slack_count;
  Tableau t(rows, cols);
  std::size_t next_slack = n;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < rows; ++r) {
    const Constraint& c = problem.constraints[r];
    const double sign = c.rhs < 0.0 ? -1.0 : 1.0;
    Relation rel = c.relation;
    if (sign < 0.0 && rel != Relation::kEqual) {
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual
                                        : Relation::kLessEqual;
    }
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = sign * c.coefficients[j];
    t.rhs(r) = sign * c.rhs;
    if (rel == Relation::kLessEqual) {
      t.at(r, next_slack) = 1.0;
      t.basis(r) = next_slack++;
    } else {
      if (rel == Relation::kGreaterEqual) t.at(r, next_slack++) = -1.0;
      t.at(r, next_artificial) = 1.0;
      t.basis(r) = next_artificial++;
    }
  }

  Solution solution;
  std::size_t iterations = 0;

  if (artificial_count > 0) {
    std::vector<double> phase1_cost(cols, 0.0);
    for (std::size_t c = first_artificial; c < cols; ++c) phase1_cost[c] = -1.0;
    const Status status =
        Optimize(t, phase1_cost, std::vector<bool>(cols, true), options,
                 iterations);
    if (status == Status::kIterationLimit) {
      solution.status = status;
      return solution;
    }
    double infeasibility = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t.basis(r) >= first_artificial) infeasibility += t.rhs(r);
    }
    if (infeasibility > options.feasibility_tolerance) {
      solution.status = Status::kInfeasible;
      return solution;
    }
    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are redundant and stay inert for phase two.
    for (std::size_t r = 0; r < rows; ++r) {
      if (t.basis(r) < first_artificial) continue;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (std::abs(t.at(r, c)) > options.pivot_tolerance) {
          t.Pivot(r, c);
          break;
        }
      }
    }
  }

  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = problem.maximize ? problem.objective[j] : -problem.objective[j];
  }
  std::vector<bool> allowed(cols, true);
  for (std::size_t c = first_artificial; c < cols; ++c) allowed[c] = false;
  solution.status = Optimize(t, cost, allowed, options, iterations);
  if (solution.status != Status::kOptimal) return solution;

  solution.x.assign(n, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (t.basis(r) < n) solution.x[t.basis(r)] = std::max(t.rhs(r), 0.0);
  }
  solution.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    solution.objective += problem.objective[j] * solution.x[j];
  }
  return solution;
}

}  // namespace calib::lp
