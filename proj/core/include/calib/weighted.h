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

#ifndef CALIB_WEIGHTED_H_
#define CALIB_WEIGHTED_H_

// Weighted calibration error |E[w(p)(y - p)]| for individual weight functions
// and for the families that admit exact maximization: 1-Lipschitz weights
// (smooth calibration error), normalized low-degree polynomials and the unit
// ball of a reproducing kernel Hilbert space. Also the earthmover distance
// between the joint and its Bernoulli(v) surrogate.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "calib/empirical.h"

namespace calib {

// A weight w: [0,1] -> [-1,1], optionally declared L-Lipschitz.
class WeightFunction {
 public:
  static WeightFunction Lipschitz(std::function<double(double)> eval,
                                  double lipschitz_bound);
  static WeightFunction BoundedOnly(std::function<double(double)> eval);

  double operator()(double v) const { return eval_(v); }
  const std::optional<double>& lipschitz_bound() const { return lipschitz_; }

  // Probes the weight on the support of `joint`. Throws InvalidArgumentError
  // if it leaves [-1,1] or breaks its declared Lipschitz bound on a pair of
  // support points.
  void Validate(const EmpiricalJoint& joint) const;

 private:
  WeightFunction(std::function<double(double)> eval,
                 std::optional<double> lipschitz)
      : eval_(std::move(eval)), lipschitz_(lipschitz) {}

  std::function<double(double)> eval_;
  std::optional<double> lipschitz_;
};

// |sum over atoms of mass * w(v) * (y - v)|; validates w first.
double WeightedCe(const EmpiricalJoint& joint, const WeightFunction& w);

enum class SmoothCeMethod {
  // Exact dynamic program over the chain of distinct predictions.
  kChainDp,
  // Generic simplex on the same chain-constrained program.
  kLinearProgram,
};

// max over 1-Lipschitz w: [0,1] -> [-1,1] of |E[w(p)(y - p)]|.
double SmoothCe(const EmpiricalJoint& joint,
                SmoothCeMethod method = SmoothCeMethod::kChainDp);

// Degree-d calibration error over polynomials whose monomial coefficients have
// l1 norm at most one. The optimum sits on a signed monomial, so this equals
// max over 0 <= k <= d of |E[p^k (y - p)]|.
double LowDegreeCe(const EmpiricalJoint& joint, unsigned degree);

// Symmetric positive semidefinite kernel on [0,1].
struct Kernel {
  std::string name;
  std::function<double(double, double)> eval;
  // Built-in kernels are PSD by construction and skip the Gram check.
  bool known_psd = false;

  static Kernel Laplace(double bandwidth = 1.0);
  static Kernel Gaussian(double bandwidth = 1.0);
  static Kernel Custom(std::string name,
                       std::function<double(double, double)> eval);
};

// sqrt(sum_ij r_i r_j k(v_i, v_j)) with r the per-level residual mass, i.e.
// the largest |E[w(p)(y - p)]| over the kernel's unit ball. Throws
// InvalidArgumentError when a custom kernel's Gram matrix has an eigenvalue
// below -1e-9.
double KernelCe(const EmpiricalJoint& joint,
                const Kernel& kernel = Kernel::Laplace());

enum class EmdMethod {
  // Transport program on the full union support for small supports, ladder
  // network flow otherwise.
  kAuto,
  // Dense transport linear program between every support point.
  kTransportLp,
  // Min-cost flow on the two-rail graph whose path metric is |dv| + |dy|.
  kLadderFlow,
};

// Earthmover distance, under |v - v'| + |y - y'|, between the joint and the
// surrogate that draws y ~ Bernoulli(v).
double EmdJoints(const EmpiricalJoint& joint,
                 EmdMethod method = EmdMethod::kAuto);

// Largest number of distinct predictions routed to the transport program by
// EmdMethod::kAuto.
inline constexpr std::size_t kTransportLpMaxValues = 16;

}  // namespace calib

#endif  // CALIB_WEIGHTED_H_
