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

#include "calib/decision.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "calib/errors.h"

namespace calib {
namespace {

void RequireUnit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InvalidArgumentError(std::string(what) + " must lie in [0,1]");
  }
}

double XLogX(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

std::string FormatAction(double a) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", a);
  return buf;
}

// Interior breakpoints and segment slopes of the upper envelope on [0,1].
ConvexPotential::Piecewise EnvelopePieces(
    const std::vector<std::pair<double, double>>& lines) {
  auto value_at = [&](std::size_t i, double x) {
    return lines[i].first * x + lines[i].second;
  };
  std::size_t cur = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const double a = value_at(i, 0.0);
    const double b = value_at(cur, 0.0);
    if (a > b || (a == b && lines[i].first > lines[cur].first)) cur = i;
  }
  ConvexPotential::Piecewise pieces;
  pieces.slopes.push_back(lines[cur].first);
  double x = 0.0;
  while (true) {
    std::size_t next = cur;
    double next_x = 1.0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const double ds = lines[i].first - lines[cur].first;
      if (ds <= 0.0) continue;
      const double cross = (lines[cur].second - lines[i].second) / ds;
      if (cross <= x) continue;
      if (cross < next_x ||
          (cross == next_x && next != cur &&
           lines[i].first > lines[next].first)) {
        next = i;
        next_x = cross;
      }
    }
    if (next == cur || next_x >= 1.0) break;
    pieces.breakpoints.push_back(next_x);
    pieces.slopes.push_back(lines[next].first);
    cur = next;
    x = next_x;
  }
  return pieces;
}

}  // namespace

DecisionTask DecisionTask::Create(std::vector<std::string> actions,
                                  std::vector<std::array<double, 2>> payoff) {
  if (payoff.empty()) throw InvalidArgumentError("task needs an action");
  if (actions.size() != payoff.size()) {
    throw InvalidArgumentError("task has " + std::to_string(actions.size()) +
                               " action ids but " +
                               std::to_string(payoff.size()) + " payoff rows");
  }
  for (const auto& row : payoff) {
    for (double u : row) RequireUnit(u, "payoff");
  }
  DecisionTask task;
  task.actions_ = std::move(actions);
  task.payoff_ = std::move(payoff);
  return task;
}

DecisionTask MatchingTask() {
  return DecisionTask::Create({"0", "1"}, {{{1.0, 0.0}}, {{0.0, 1.0}}});
}

DecisionTask QuadraticTask(double resolution) {
  if (!(resolution > 0.0 && resolution <= 1.0)) {
    throw InvalidArgumentError("quadratic task resolution must be in (0,1]");
  }
  auto n = static_cast<std::size_t>(std::llround(1.0 / resolution));
  if (std::abs(static_cast<double>(n) * resolution - 1.0) > 1e-9) {
    n = static_cast<std::size_t>(std::ceil(1.0 / resolution));
  }
  std::vector<std::string> actions;
  std::vector<std::array<double, 2>> payoff;
  actions.reserve(n + 1);
  payoff.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const double a = static_cast<double>(k) / static_cast<double>(n);
    actions.push_back(FormatAction(a));
    payoff.push_back({1.0 - a * a, 1.0 - (1.0 - a) * (1.0 - a)});
  }
  return DecisionTask::Create(std::move(actions), std::move(payoff));
}

DecisionTask ThresholdTask(double vstar) {
  RequireUnit(vstar, "threshold");
  // Lines c - v/2 and c - vstar + v/2 cross at vstar; c keeps both in [0,1].
  const double c = std::max(0.5, vstar);
  return DecisionTask::Create(
      {"below", "above"},
      {{{c, c - 0.5}}, {{c - vstar, c - vstar + 0.5}}});
}

std::size_t BestResponse(const DecisionTask& task, double v) {
  std::size_t best = 0;
  double best_value = task.ExpectedPayoff(0, v);
  for (std::size_t a = 1; a < task.size(); ++a) {
    const double value = task.ExpectedPayoff(a, v);
    if (value > best_value) {
      best = a;
      best_value = value;
    }
  }
  return best;
}

Policy BestResponsePolicy(const DecisionTask& task,
                          const EmpiricalJoint& joint) {
  Policy policy;
  for (const LevelSet& level : joint.level_sets()) {
    policy.emplace(level.v, BestResponse(task, level.v));
  }
  return policy;
}

double ExpectedPayoff(const EmpiricalJoint& joint, const DecisionTask& task,
                      const Policy& policy) {
  double total = 0.0;
  for (const Atom& atom : joint.atoms()) {
    auto it = policy.find(atom.v);
    if (it == policy.end()) {
      throw InvalidArgumentError("policy is undefined at prediction " +
                                 std::to_string(atom.v));
    }
    if (it->second >= task.size()) {
      throw InvalidArgumentError("policy names action " +
                                 std::to_string(it->second) +
                                 " outside the task");
    }
    total += atom.mass * task.Payoff(it->second, atom.y);
  }
  return total;
}

double Cfdl(const EmpiricalJoint& joint, const DecisionTask& task) {
  const RecalibrationMap recal = Recalibrate(joint);
  double total = 0.0;
  for (const Atom& atom : joint.atoms()) {
    const std::size_t trusted = BestResponse(task, atom.v);
    const std::size_t informed = BestResponse(task, recal(atom.v));
    total += atom.mass *
             (task.Payoff(informed, atom.y) - task.Payoff(trusted, atom.y));
  }
  return std::max(total, 0.0);
}

ConvexPotential ConvexPotential::Quadratic() {
  return ConvexPotential([](double v) { return v * v; },
                         [](double v) { return 2.0 * v; });
}

ConvexPotential ConvexPotential::NegativeEntropy() {
  return ConvexPotential(
      [](double v) { return XLogX(v) + XLogX(1.0 - v); },
      [](double v) {
        constexpr double kInf = std::numeric_limits<double>::infinity();
        if (v <= 0.0) return -kInf;
        if (v >= 1.0) return kInf;
        return std::log(v) - std::log1p(-v);
      });
}

ConvexPotential ConvexPotential::VShaped(double vstar) {
  RequireUnit(vstar, "vstar");
  Piecewise pieces;
  if (vstar > 0.0 && vstar < 1.0) {
    pieces.breakpoints = {vstar};
    pieces.slopes = {-1.0, 1.0};
  } else {
    pieces.slopes = {vstar >= 1.0 ? -1.0 : 1.0};
  }
  return ConvexPotential(
      [vstar](double v) { return std::abs(v - vstar); },
      [vstar](double v) { return v >= vstar ? 1.0 : -1.0; }, std::move(pieces));
}

ConvexPotential ConvexPotential::UpperEnvelope(
    std::vector<std::pair<double, double>> lines) {
  if (lines.empty()) throw InvalidArgumentError("envelope needs a line");
  for (const auto& [slope, intercept] : lines) {
    if (!std::isfinite(slope) || !std::isfinite(intercept)) {
      throw InvalidArgumentError("envelope lines must be finite");
    }
  }
  Piecewise pieces = EnvelopePieces(lines);
  auto argmax = [lines](double v) {
    std::size_t best = 0;
    double best_value = lines[0].first * v + lines[0].second;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const double value = lines[i].first * v + lines[i].second;
      if (value > best_value) {
        best = i;
        best_value = value;
      }
    }
    return best;
  };
  return ConvexPotential(
      [lines, argmax](double v) {
        const auto& line = lines[argmax(v)];
        return line.first * v + line.second;
      },
      [lines, argmax](double v) { return lines[argmax(v)].first; },
      std::move(pieces));
}

double Bregman(const ConvexPotential& phi, double mu_star, double mu) {
  RequireUnit(mu_star, "mu_star");
  RequireUnit(mu, "mu");
  if (mu_star == mu) return 0.0;
  return phi.Value(mu_star) - phi.Value(mu) -
         phi.Subgradient(mu) * (mu_star - mu);
}

ConvexPotential TaskPotential(const DecisionTask& task) {
  std::vector<std::pair<double, double>> lines;
  lines.reserve(task.size());
  for (const auto& row : task.payoff()) lines.emplace_back(row[1] - row[0], row[0]);
  ConvexPotential::Piecewise pieces = EnvelopePieces(lines);
  return ConvexPotential(
      [task](double v) { return task.ExpectedPayoff(BestResponse(task, v), v); },
      [task](double v) {
        const std::size_t a = BestResponse(task, v);
        return task.Payoff(a, 1) - task.Payoff(a, 0);
      },
      std::move(pieces));
}

double ExpectedBregman(const EmpiricalJoint& joint, const ConvexPotential& phi) {
  double total = 0.0;
  for (const LevelSet& level : joint.level_sets()) {
    total += level.mass * Bregman(phi, level.Mean(), level.v);
  }
  return total;
}

double CfdlBregman(const EmpiricalJoint& joint, const DecisionTask& task) {
  return std::max(ExpectedBregman(joint, TaskPotential(task)), 0.0);
}

double VDivergence(double vstar, double v1, double v2) {
  const double lo = std::min(v1, v2);
  const double hi = std::max(v1, v2);
  if (vstar > lo && vstar <= hi) return 2.0 * std::abs(v1 - vstar);
  return 0.0;
}

double Cdl(const EmpiricalJoint& joint) {
  // Level v contributes A * vstar + B while vstar is in (lo, hi].
  struct Event {
    double x;
    double da;
    double db;
  };
  std::vector<Event> events;
  for (const LevelSet& level : joint.level_sets()) {
    const double mean = level.Mean();
    if (mean == level.v) continue;
    const double w = 2.0 * level.mass;
    const double a = mean > level.v ? -w : w;
    const double b = mean > level.v ? w * mean : -w * mean;
    events.push_back({std::min(mean, level.v), a, b});
    events.push_back({std::max(mean, level.v), -a, -b});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& l, const Event& r) { return l.x < r.x; });

  double best = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t i = 0;
  while (i < events.size()) {
    const double x = events[i].x;
    for (; i < events.size() && events[i].x == x; ++i) {
      slope += events[i].da;
      intercept += events[i].db;
    }
    if (i == events.size()) break;
    // The active set is constant on (x, next]; the right limit at x and the
    // value at next bound the piece.
    const double next = events[i].x;
    best = std::max({best, slope * x + intercept, slope * next + intercept});
  }
  return best;
}

}  // namespace calib
