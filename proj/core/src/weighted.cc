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

#include "calib/weighted.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "calib/errors.h"
#include "calib/lp.h"

namespace calib {
namespace {

constexpr double kWeightSlack = 1e-12;
constexpr std::size_t kAllPairsProbeLimit = 512;

struct Vertex {
  double x;
  double y;
};

double Interpolate(const Vertex& a, const Vertex& b, double x) {
  if (b.x == a.x) return std::max(a.y, b.y);
  const double t = (x - a.x) / (b.x - a.x);
  return a.y + t * (b.y - a.y);
}

// Value function of the chain program, restricted to [-1, 1]: a concave
// piecewise-linear function given by its vertices in increasing x.
using ConcavePwl = std::vector<Vertex>;

// G(w) = max of F over [w - d, w + d], clipped back to [-1, 1]. Vertices left
// of a maximizer move left by d, vertices right of it move right by d.
ConcavePwl SlidingWindowMax(const ConcavePwl& f, double d) {
  std::size_t peak = 0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i].y > f[peak].y) peak = i;
  }
  ConcavePwl stretched;
  stretched.reserve(f.size() + 1);
  for (std::size_t i = 0; i <= peak; ++i) stretched.push_back({f[i].x - d, f[i].y});
  for (std::size_t i = peak; i < f.size(); ++i) {
    stretched.push_back({f[i].x + d, f[i].y});
  }

  ConcavePwl clipped;
  clipped.reserve(stretched.size());
  std::size_t i = 0;
  while (i + 1 < stretched.size() && stretched[i + 1].x <= -1.0) ++i;
  clipped.push_back({-1.0, Interpolate(stretched[i], stretched[i + 1], -1.0)});
  for (++i; i < stretched.size() && stretched[i].x < 1.0; ++i) {
    if (stretched[i].x > clipped.back().x) clipped.push_back(stretched[i]);
  }
  clipped.push_back({1.0, Interpolate(stretched[i - 1], stretched[i], 1.0)});
  return clipped;
}

double SmoothCeChainDp(const EmpiricalJoint& joint) {
  const auto& levels = joint.level_sets();
  ConcavePwl value = {{-1.0, -levels[0].Residual()},
                      {1.0, levels[0].Residual()}};
  for (std::size_t j = 1; j < levels.size(); ++j) {
    value = SlidingWindowMax(value, levels[j].v - levels[j - 1].v);
    const double c = levels[j].Residual();
    for (Vertex& vertex : value) vertex.y += c * vertex.x;
  }
  double best = 0.0;
  for (const Vertex& vertex : value) best = std::max(best, vertex.y);
  return best;
}

double SmoothCeLinearProgram(const EmpiricalJoint& joint) {
  // Shifted variables u_j = w_j + 1 in [0, 2] keep every right-hand side
  // nonnegative.
  const auto& levels = joint.level_sets();
  const std::size_t m = levels.size();
  lp::Problem problem;
  problem.num_variables = m;
  problem.objective.resize(m);
  double offset = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    problem.objective[j] = levels[j].Residual();
    offset += levels[j].Residual();
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> row(m, 0.0);
    row[j] = 1.0;
    problem.AddConstraint(std::move(row), lp::Relation::kLessEqual, 2.0);
  }
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const double gap = levels[j + 1].v - levels[j].v;
    std::vector<double> up(m, 0.0);
    up[j + 1] = 1.0;
    up[j] = -1.0;
    std::vector<double> down(m, 0.0);
    down[j + 1] = -1.0;
    down[j] = 1.0;
    problem.AddConstraint(std::move(up), lp::Relation::kLessEqual, gap);
    problem.AddConstraint(std::move(down), lp::Relation::kLessEqual, gap);
  }
  const lp::Solution solution = lp::Solve(problem);
  if (solution.status != lp::Status::kOptimal) {
    throw std::runtime_error("smooth calibration program did not converge");
  }
  return std::max(solution.objective - offset, 0.0);
}

}  // namespace

WeightFunction WeightFunction::Lipschitz(std::function<double(double)> eval,
                                         double lipschitz_bound) {
  if (!(lipschitz_bound >= 0.0) || !std::isfinite(lipschitz_bound)) {
    throw InvalidArgumentError("Lipschitz bound must be finite and >= 0");
  }
  return WeightFunction(std::move(eval), lipschitz_bound);
}

WeightFunction WeightFunction::BoundedOnly(std::function<double(double)> eval) {
  return WeightFunction(std::move(eval), std::nullopt);
}

void WeightFunction::Validate(const EmpiricalJoint& joint) const {
  const auto& levels = joint.level_sets();
  std::vector<double> values(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    values[i] = eval_(levels[i].v);
    if (!(std::abs(values[i]) <= 1.0 + kWeightSlack)) {
      throw InvalidArgumentError("weight leaves [-1,1] at v = " +
                                 std::to_string(levels[i].v));
    }
  }
  if (!lipschitz_) return;
  auto check = [&](std::size_t i, std::size_t j) {
    const double allowed =
        *lipschitz_ * std::abs(levels[i].v - levels[j].v) + kWeightSlack;
    if (std::abs(values[i] - values[j]) > allowed) {
      throw InvalidArgumentError("weight breaks its declared Lipschitz bound");
    }
  };
  if (levels.size() <= kAllPairsProbeLimit) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      for (std::size_t j = i + 1; j < levels.size(); ++j) check(i, j);
    }
  } else {
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) check(i, i + 1);
  }
}

double WeightedCe(const EmpiricalJoint& joint, const WeightFunction& w) {
  w.Validate(joint);
  double sum = 0.0;
  for (const Atom& atom : joint.atoms()) {
    sum += atom.mass * w(atom.v) * (atom.y - atom.v);
  }
  return std::abs(sum);
}

double SmoothCe(const EmpiricalJoint& joint, SmoothCeMethod method) {
  switch (method) {
    case SmoothCeMethod::kChainDp:
      return SmoothCeChainDp(joint);
    case SmoothCeMethod::kLinearProgram:
      return SmoothCeLinearProgram(joint);
  }
  return SmoothCeChainDp(joint);
}

double LowDegreeCe(const EmpiricalJoint& joint, unsigned degree) {
  double best = 0.0;
  for (unsigned k = 0; k <= degree; ++k) {
    double moment = 0.0;
    for (const LevelSet& level : joint.level_sets()) {
      moment += std::pow(level.v, static_cast<double>(k)) * level.Residual();
    }
    best = std::max(best, std::abs(moment));
  }
  return best;
}

Kernel Kernel::Laplace(double bandwidth) {
  if (!(bandwidth > 0.0)) throw InvalidArgumentError("bandwidth must be > 0");
  return {"laplace",
          [bandwidth](double u, double v) {
            return std::exp(-std::abs(u - v) / bandwidth);
          },
          true};
}

Kernel Kernel::Gaussian(double bandwidth) {
  if (!(bandwidth > 0.0)) throw InvalidArgumentError("bandwidth must be > 0");
  return {"gaussian",
          [bandwidth](double u, double v) {
            const double z = (u - v) / bandwidth;
            return std::exp(-0.5 * z * z);
          },
          true};
}

Kernel Kernel::Custom(std::string name,
                      std::function<double(double, double)> eval) {
  return {std::move(name), std::move(eval), false};
}

double KernelCe(const EmpiricalJoint& joint, const Kernel& kernel) {
  const auto& levels = joint.level_sets();
  const std::size_t m = levels.size();
  if (!kernel.known_psd) {
    Eigen::MatrixXd gram(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        gram(i, j) = kernel.eval(levels[i].v, levels[j].v);
      }
    }
    if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw InvalidArgumentError("kernel '" + kernel.name + "' is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        gram, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-9) {
      throw InvalidArgumentError("kernel '" + kernel.name +
                                 "' has a non-PSD Gram matrix on the support");
    }
  }
  double quadratic = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double ri = levels[i].Residual();
    quadratic += ri * ri * kernel.eval(levels[i].v, levels[i].v);
    for (std::size_t j = i + 1; j < m; ++j) {
      quadratic +=
          2.0 * ri * levels[j].Residual() * kernel.eval(levels[i].v, levels[j].v);
    }
  }
  return std::sqrt(std::max(quadratic, 0.0));
}

}  // namespace calib
