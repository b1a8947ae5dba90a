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

#include "measures.h"

#include <charconv>
#include <fstream>
#include <set>
#include <string>
#include <utility>

#include "calib/basic_measures.h"
#include "calib/distance.h"
#include "calib/errors.h"
#include "calib/io.h"
#include "calib/weighted.h"

namespace calib::tools {
namespace {

struct MeasureId {
  std::string name;
  std::string param;
  bool has_param = false;
};

const std::set<std::string, std::less<>> kPlain = {
    "ece", "ece2", "tv", "smce", "emd", "cdl", "intce", "dce_upper", "dce"};
const std::set<std::string, std::less<>> kParameterized = {
    "ece_q", "binned", "lowdeg", "cfdl", "random_intce"};

MeasureId Parse(std::string_view id) {
  MeasureId parsed;
  const auto colon = id.find(':');
  parsed.name = std::string(id.substr(0, colon));
  if (colon != std::string_view::npos) {
    parsed.param = std::string(id.substr(colon + 1));
    parsed.has_param = true;
  }
  const bool known =
      (kPlain.count(parsed.name) && !parsed.has_param) ||
      (kParameterized.count(parsed.name) && parsed.has_param) ||
      (parsed.name == "kernel" &&
       (!parsed.has_param || parsed.param == "laplace" ||
        parsed.param == "gaussian"));
  if (!known) {
    throw UnknownMeasureError("unknown measure '" + std::string(id) + "'");
  }
  return parsed;
}

double Number(const MeasureId& id) {
  double value = 0.0;
  const char* begin = id.param.data();
  const char* end = begin + id.param.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || id.param.empty()) {
    throw InvalidArgumentError("bad parameter in '" + id.name + ":" +
                               id.param + "'");
  }
  return value;
}

unsigned Count(const MeasureId& id) {
  unsigned long value = 0;
  const char* begin = id.param.data();
  const char* end = begin + id.param.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || id.param.empty() || value > 1u << 20) {
    throw InvalidArgumentError("bad count in '" + id.name + ":" + id.param +
                               "'");
  }
  return static_cast<unsigned>(value);
}

Kernel MakeKernel(const std::string& name) {
  if (name == "laplace") return Kernel::Laplace();
  if (name == "gaussian") return Kernel::Gaussian();
  throw UnknownMeasureError("unknown kernel '" + name + "'");
}

}  // namespace

void CheckMeasureId(std::string_view id) { Parse(id); }

DecisionTask LoadTask(std::string_view spec, const MeasureConfig& config) {
  if (spec == "matching") return MatchingTask();
  if (spec == "quadratic") return QuadraticTask(config.quadratic_resolution);
  if (spec.substr(0, 10) == "threshold:") {
    return ThresholdTask(Number({"threshold", std::string(spec.substr(10)), true}));
  }
  std::filesystem::path path(spec);
  if (path.is_relative()) path = config.base_dir / path;
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open task file '" + path.string() + "'");
  return ReadTaskJson(in);
}

double ComputeMeasure(std::string_view id_text, const MeasureInput& input,
                      const MeasureConfig& config,
                      std::vector<std::string>* warnings) {
  const MeasureId id = Parse(id_text);
  const EmpiricalJoint& joint = input.joint;
  const OracleOptions oracle{config.oracle_cap};
  if (id.name == "ece") return Ece(joint);
  if (id.name == "ece2") return EceQ(joint, 2.0);
  if (id.name == "ece_q") return EceQ(joint, Number(id));
  if (id.name == "tv") return TvCharacterization(joint);
  if (id.name == "binned") return BinnedEce(joint, Count(id));
  if (id.name == "smce") return SmoothCe(joint);
  if (id.name == "lowdeg") return LowDegreeCe(joint, Count(id));
  if (id.name == "kernel") {
    return KernelCe(joint, MakeKernel(id.has_param ? id.param : config.kernel));
  }
  if (id.name == "emd") return EmdJoints(joint);
  if (id.name == "cdl") return Cdl(joint);
  if (id.name == "cfdl") return Cfdl(joint, LoadTask(id.param, config));
  if (id.name == "intce") {
    const IntceOptResult result = IntceOpt(joint, config.grid);
    if (result.unseparated && warnings) {
      warnings->push_back("intce: grid " + std::to_string(config.grid) +
                          " cannot separate every pair of distinct predictions");
    }
    return result.value;
  }
  if (id.name == "random_intce") {
    return RandomGridIntce(joint, Number(id), config.seed);
  }
  if (id.name == "dce_upper") return DceUpperOracle(joint, oracle);
  if (id.name == "dce") {
    if (!input.instance) {
      throw InvalidArgumentError("dce needs an instance JSON input");
    }
    return DceOracle(*input.instance, oracle);
  }
  throw UnknownMeasureError("unknown measure '" + std::string(id_text) + "'");
}

std::vector<std::string> SplitList(std::string_view list) {
  std::vector<std::string> items;
  while (!list.empty()) {
    const auto comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return items;
}

Json VerifyRelations(const EmpiricalJoint& joint, double tolerance) {
  const double ece = Ece(joint);
  const double ece2 = EceQ(joint, 2.0);
  const double cdl = Cdl(joint);
  const std::pair<const char*, std::pair<double, double>> steps[] = {
      {"ece^2 <= ece2^2", {ece * ece, ece2 * ece2}},
      {"ece2^2 <= cdl", {ece2 * ece2, cdl}},
      {"cdl <= 2 ece", {cdl, 2.0 * ece}},
      {"2 ece <= 2 ece2", {2.0 * ece, 2.0 * ece2}},
  };
  Json checks = Json::object();
  bool all = true;
  for (const auto& [name, sides] : steps) {
    const bool holds = sides.first <= sides.second + tolerance;
    all = all && holds;
    checks[name] = {{"lhs", sides.first}, {"rhs", sides.second}, {"holds", holds}};
  }
  return {{"tolerance", tolerance}, {"checks", checks}, {"all_hold", all}};
}

}  // namespace calib::tools
