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

#ifndef CALIB_TOOLS_MEASURES_H_
#define CALIB_TOOLS_MEASURES_H_

// Measure ids accepted by `calib report`:
//
//   ece  ece2  ece_q:<q>  tv  binned:<b>  smce  lowdeg:<d>
//   kernel[:laplace|gaussian]  emd  cdl  cfdl:<task>  intce
//   random_intce:<beta>  dce_upper  dce
//
// <task> is matching, quadratic, threshold:<v> or the path of a task JSON
// file. dce needs an instance input.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "calib/decision.h"
#include "calib/empirical.h"
#include "json_writer.h"

namespace calib::tools {

struct MeasureConfig {
  std::size_t grid = 1000;
  std::size_t oracle_cap = 12;
  double tolerance = 1e-9;
  std::string kernel = "laplace";
  std::uint64_t seed = 0;
  double quadratic_resolution = 1e-3;
  // Relative task paths resolve against this directory.
  std::filesystem::path base_dir = ".";
};

struct MeasureInput {
  const EmpiricalJoint& joint;
  const FiniteInstance* instance = nullptr;
};

// Throws UnknownMeasureError for an unrecognized id.
void CheckMeasureId(std::string_view id);

// Throws UnknownMeasureError, InvalidArgumentError (bad parameter or missing
// instance), ParseError (unreadable task file) or OracleSizeError. Notes
// about the result, such as an unseparated grid, are appended to `warnings`.
double ComputeMeasure(std::string_view id, const MeasureInput& input,
                      const MeasureConfig& config,
                      std::vector<std::string>* warnings = nullptr);

DecisionTask LoadTask(std::string_view spec, const MeasureConfig& config);

// Splits a comma-separated list, dropping empty entries.
std::vector<std::string> SplitList(std::string_view list);

// ece^2 <= ece2^2 <= cdl <= 2 ece <= 2 ece2, each step checked with
// `tolerance` of slack.
Json VerifyRelations(const EmpiricalJoint& joint, double tolerance);

}  // namespace calib::tools

#endif  // CALIB_TOOLS_MEASURES_H_
