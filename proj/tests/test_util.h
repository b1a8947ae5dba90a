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

#ifndef CALIB_TESTS_TEST_UTIL_H_
#define CALIB_TESTS_TEST_UTIL_H_

// Random instance generators and brute-force reference implementations. The
// references deliberately avoid the library's algorithms: they enumerate,
// scan or state the problem in its most redundant form.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "calib/decision.h"
#include "calib/distance.h"
#include "calib/empirical.h"
#include "calib/lp.h"

namespace calib::testing {

using Rng = std::mt19937_64;

inline double Uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t UniformInt(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// A prediction value; a quarter of draws snap to a coarse grid (including
// the endpoints 0 and 1) to exercise ties and boundaries.
inline double RandomValue(Rng& rng) {
  if (UniformInt(rng, 0, 3) == 0) {
    return static_cast<double>(UniformInt(rng, 0, 20)) / 20.0;
  }
  return Uniform(rng);
}

// A joint with between 1 and max_values distinct predictions. Label
// fractions are sometimes 0, 1 or exactly v.
inline EmpiricalJoint RandomJoint(Rng& rng, std::size_t max_values) {
  const std::size_t m = UniformInt(rng, 1, max_values);
  std::vector<Atom> atoms;
  std::vector<double> masses(m);
  double total = 0.0;
  for (double& w : masses) total += (w = Uniform(rng, 0.05, 1.0));
  for (std::size_t i = 0; i < m; ++i) {
    const double v = RandomValue(rng);
    double frac = Uniform(rng);
    switch (UniformInt(rng, 0, 5)) {
      case 0: frac = 0.0; break;
      case 1: frac = 1.0; break;
      case 2: frac = v; break;
      default: break;
    }
    const double mass = masses[i] / total;
    atoms.push_back({v, 1, mass * frac});
    atoms.push_back({v, 0, mass * (1.0 - frac)});
  }
  return EmpiricalJoint::FromAtoms(std::move(atoms));
}

// Every level set has mean exactly v (up to rounding in label_mass).
inline EmpiricalJoint RandomCalibratedJoint(Rng& rng, std::size_t max_values) {
  const std::size_t m = UniformInt(rng, 1, max_values);
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < m; ++i) {
    const double v = RandomValue(rng);
    const double mass = Uniform(rng, 0.05, 1.0) / static_cast<double>(m);
    atoms.push_back({v, 1, mass * v});
    atoms.push_back({v, 0, mass * (1.0 - v)});
  }
  double total = 0.0;
  for (const Atom& a : atoms) total += a.mass;
  for (Atom& a : atoms) a.mass /= total;
  return EmpiricalJoint::FromAtoms(std::move(atoms));
}

// Instance with 1..max_points points; predictions sometimes repeat.
inline FiniteInstance RandomInstance(Rng& rng, std::size_t max_points) {
  const std::size_t n = UniformInt(rng, 1, max_points);
  std::vector<InstancePoint> points;
  double total = 0.0;
  std::vector<double> preds;
  for (std::size_t i = 0; i < n; ++i) {
    InstancePoint p;
    p.id = std::to_string(i);
    p.mass = Uniform(rng, 0.05, 1.0);
    total += p.mass;
    if (!preds.empty() && UniformInt(rng, 0, 3) == 0) {
      p.pred = preds[UniformInt(rng, 0, preds.size() - 1)];
    } else {
      p.pred = RandomValue(rng);
    }
    preds.push_back(p.pred);
    p.cond_mean = UniformInt(rng, 0, 4) == 0 ? p.pred : Uniform(rng);
    points.push_back(p);
  }
  for (auto& p : points) p.mass /= total;
  return FiniteInstance::Create(std::move(points));
}

// 1..max_actions actions; payoffs are sometimes rounded to tenths so that
// ties happen.
inline DecisionTask RandomTask(Rng& rng, std::size_t max_actions) {
  const std::size_t k = UniformInt(rng, 1, max_actions);
  const bool coarse = UniformInt(rng, 0, 2) == 0;
  std::vector<std::string> names;
  std::vector<std::array<double, 2>> payoff;
  for (std::size_t a = 0; a < k; ++a) {
    names.push_back("a" + std::to_string(a));
    double u0 = Uniform(rng);
    double u1 = Uniform(rng);
    if (coarse) {
      u0 = std::round(u0 * 10.0) / 10.0;
      u1 = std::round(u1 * 10.0) / 10.0;
    }
    payoff.push_back({u0, u1});
  }
  return DecisionTask::Create(std::move(names), std::move(payoff));
}

// ---------------------------------------------------------------------------
// Reference implementations.

// Per distinct v: (mass, E[(y - v) 1{p = v}]), computed straight from atoms.
inline std::map<double, std::pair<double, double>> AtomResiduals(
    const EmpiricalJoint& joint) {
  std::map<double, std::pair<double, double>> out;
  for (const Atom& a : joint.atoms()) {
    out[a.v].first += a.mass;
    out[a.v].second += a.mass * (a.y - a.v);
  }
  return out;
}

// max over sign patterns b in {-1,1}^m of sum_v b(v) * residual(v).
inline double SignWitnessEce(const EmpiricalJoint& joint) {
  std::vector<double> r;
  for (const auto& [v, mr] : AtomResiduals(joint)) r.push_back(mr.second);
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << r.size()); ++mask) {
    double total = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      total += ((mask >> i) & 1u) ? r[i] : -r[i];
    }
    best = std::max(best, total);
  }
  return best;
}

// Smooth calibration error as a linear program with every pairwise
// Lipschitz constraint and free variables split into positive parts.
inline double PairwiseLpSmoothCe(const EmpiricalJoint& joint) {
  std::vector<double> v;
  std::vector<double> r;
  for (const auto& [value, mr] : AtomResiduals(joint)) {
    v.push_back(value);
    r.push_back(mr.second);
  }
  const std::size_t m = v.size();
  // w_i = a_i - b_i with a_i, b_i >= 0.
  lp::Problem problem;
  problem.num_variables = 2 * m;
  problem.objective.assign(2 * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    problem.objective[i] = r[i];
    problem.objective[m + i] = -r[i];
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(2 * m, 0.0);
    row[i] = 1.0;
    row[m + i] = -1.0;
    problem.AddConstraint(row, lp::Relation::kLessEqual, 1.0);
    problem.AddConstraint(row, lp::Relation::kGreaterEqual, -1.0);
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      std::vector<double> diff(2 * m, 0.0);
      diff[i] = 1.0;
      diff[m + i] = -1.0;
      diff[j] = -1.0;
      diff[m + j] = 1.0;
      problem.AddConstraint(diff, lp::Relation::kLessEqual,
                            std::abs(v[i] - v[j]));
    }
  }
  const lp::Solution s = lp::Solve(problem);
  return s.status == lp::Status::kOptimal ? s.objective
                                          : std::numeric_limits<double>::quiet_NaN();
}

// Optimal transport between the joint and its surrogate, with one variable
// per ordered pair of the 2m union-support points.
inline double FullTransportEmd(const EmpiricalJoint& joint) {
  struct Point {
    double v;
    int y;
  };
  std::vector<Point> support;
  std::vector<double> source;
  std::vector<double> target;
  for (const auto& [v, mr] : AtomResiduals(joint)) {
    double ones = 0.0;
    for (const Atom& a : joint.atoms()) {
      if (a.v == v && a.y == 1) ones += a.mass;
    }
    const double mass = mr.first;
    support.push_back({v, 0});
    source.push_back(mass - ones);
    target.push_back(mass * (1.0 - v));
    support.push_back({v, 1});
    source.push_back(ones);
    target.push_back(mass * v);
  }
  const std::size_t k = support.size();
  lp::Problem problem;
  problem.maximize = false;
  problem.num_variables = k * k;
  problem.objective.resize(k * k);
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = 0; t < k; ++t) {
      problem.objective[s * k + t] = std::abs(support[s].v - support[t].v) +
                                     std::abs(support[s].y - support[t].y);
    }
  }
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<double> row(k * k, 0.0);
    for (std::size_t t = 0; t < k; ++t) row[s * k + t] = 1.0;
    problem.AddConstraint(row, lp::Relation::kEqual, source[s]);
  }
  // The last target row is implied by the others and would only add a
  // redundant, possibly slightly inconsistent, equation.
  for (std::size_t t = 0; t + 1 < k; ++t) {
    std::vector<double> row(k * k, 0.0);
    for (std::size_t s = 0; s < k; ++s) row[s * k + t] = 1.0;
    problem.AddConstraint(row, lp::Relation::kEqual, target[t]);
  }
  const lp::Solution s = lp::Solve(problem);
  return s.status == lp::Status::kOptimal ? s.objective
                                          : std::numeric_limits<double>::quiet_NaN();
}

// Sup of the V-shaped objective, scanned at every breakpoint and at points
// delta to either side. The objective has total slope at most 2, so the
// scan is within 4 * delta of the supremum.
inline double ScannedCdl(const EmpiricalJoint& joint, double delta = 1e-10) {
  std::vector<std::pair<double, double>> levels;  // (v, mean)
  std::vector<double> masses;
  std::set<double> breaks = {0.0, 1.0};
  for (const auto& [v, mr] : AtomResiduals(joint)) {
    const double mean = v + mr.second / mr.first;
    levels.emplace_back(v, mean);
    masses.push_back(mr.first);
    breaks.insert(v);
    breaks.insert(mean);
  }
  auto objective = [&](double vstar) {
    double total = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      total += masses[i] * VDivergence(vstar, levels[i].second, levels[i].first);
    }
    return total;
  };
  double best = 0.0;
  for (double b : breaks) {
    for (double x : {b - delta, b, b + delta}) {
      if (x >= 0.0 && x <= 1.0) best = std::max(best, objective(x));
    }
  }
  return best;
}

// Minimum of IntcePartition over all 2^(g-1) partitions on the g-grid.
inline double BruteGridIntce(const EmpiricalJoint& joint, std::size_t g) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << (g - 1)); ++mask) {
    std::vector<double> bp = {0.0};
    for (std::size_t j = 1; j < g; ++j) {
      if ((mask >> (j - 1)) & 1u) {
        bp.push_back(static_cast<double>(j) / static_cast<double>(g));
      }
    }
    bp.push_back(1.0);
    best = std::min(best,
                    IntcePartition(joint, IntervalPartition::Create(bp)));
  }
  return best;
}

// Distance to calibration over all n^n labelings of the points by block
// ids; every labeling induces a calibrated predictor via block means.
inline double AssignmentDce(const FiniteInstance& instance) {
  const auto& pts = instance.points();
  const std::size_t n = pts.size();
  std::vector<std::size_t> label(n, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<double> mass(n, 0.0);
    std::vector<double> ones(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      mass[label[i]] += pts[i].mass;
      ones[label[i]] += pts[i].mass * pts[i].cond_mean;
    }
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cost += pts[i].mass * std::abs(pts[i].pred - ones[label[i]] / mass[label[i]]);
    }
    best = std::min(best, cost);
    std::size_t d = 0;
    while (d < n && ++label[d] == n) label[d++] = 0;
    if (d == n) break;
  }
  return best;
}

// Largest expected payoff over every policy on the level sets, by odometer.
inline double ExhaustivePolicyPayoff(const EmpiricalJoint& joint,
                                     const DecisionTask& task) {
  const auto& levels = joint.level_sets();
  const std::size_t L = levels.size();
  const std::size_t A = task.size();
  std::vector<std::vector<double>> gain(L, std::vector<double>(A));
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t a = 0; a < A; ++a) {
      gain[l][a] = levels[l].label_mass * task.Payoff(a, 1) +
                   (levels[l].mass - levels[l].label_mass) * task.Payoff(a, 0);
    }
  }
  std::vector<std::size_t> policy(L, 0);
  double best = -std::numeric_limits<double>::infinity();
  while (true) {
    double total = 0.0;
    for (std::size_t l = 0; l < L; ++l) total += gain[l][policy[l]];
    best = std::max(best, total);
    std::size_t d = 0;
    while (d < L && ++policy[d] == A) policy[d++] = 0;
    if (d == L) break;
  }
  return best;
}

}  // namespace calib::testing

#endif  // CALIB_TESTS_TEST_UTIL_H_
