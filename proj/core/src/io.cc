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

#include "calib/io.h"

#include <istream>
#include <iterator>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "calib/errors.h"
#include "json.hpp"
#include "text.h"

namespace calib {
namespace {

using nlohmann::json;

struct Rows {
  std::vector<Sample> samples;
  std::vector<double> weights;
};

[[noreturn]] void Fail(std::size_t line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.push_back(internal::Trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

int ParseLabel(std::string_view text, std::size_t line) {
  const auto value = internal::ParseDouble(text);
  if (!value || (*value != 0.0 && *value != 1.0)) {
    Fail(line, "label must be 0 or 1, got '" + std::string(text) + "'");
  }
  return *value == 1.0 ? 1 : 0;
}

Rows ReadCsvRows(std::istream& in, bool allow_weights) {
  std::string line;
  std::size_t number = 0;
  bool weighted = false;
  bool have_header = false;
  Rows rows;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = internal::Trim(line);
    if (text.empty()) continue;
    const auto fields = SplitCommas(text);
    if (!have_header) {
      if (fields.size() == 3 && allow_weights && fields[0] == "prediction" &&
          fields[1] == "label" && fields[2] == "weight") {
        weighted = true;
      } else if (!(fields.size() == 2 && fields[0] == "prediction" &&
                   fields[1] == "label")) {
        Fail(number, allow_weights
                         ? "expected header 'prediction,label[,weight]'"
                         : "expected header 'prediction,label'");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != (weighted ? 3u : 2u)) {
      Fail(number, "expected " + std::to_string(weighted ? 3 : 2) + " fields");
    }
    const auto p = internal::ParseDouble(fields[0]);
    if (!p) Fail(number, "bad prediction '" + std::string(fields[0]) + "'");
    rows.samples.push_back({*p, ParseLabel(fields[1], number)});
    if (weighted) {
      const auto w = internal::ParseDouble(fields[2]);
      if (!w) Fail(number, "bad weight '" + std::string(fields[2]) + "'");
      rows.weights.push_back(*w);
    }
  }
  if (!have_header) throw ParseError("input is empty; a header is required");
  if (rows.samples.empty()) throw ParseError("input has no data rows");
  return rows;
}

json ParseJson(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

double NumberField(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_number()) {
    throw ParseError(where + ": missing numeric field '" + key + "'");
  }
  return it->get<double>();
}

}  // namespace

EmpiricalJoint ReadSamplesCsv(std::istream& in) {
  Rows rows = ReadCsvRows(in, true);
  return FromSamples(rows.samples, rows.weights);
}

EmpiricalJoint ReadSamplesJsonl(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  Rows rows;
  bool any_weight = false;
  while (std::getline(in, line)) {
    ++number;
    if (internal::Trim(line).empty()) continue;
    json object;
    try {
      object = json::parse(line);
    } catch (const json::exception& e) {
      Fail(number, std::string("malformed JSON: ") + e.what());
    }
    if (!object.is_object()) Fail(number, "expected an object");
    const std::string where = "line " + std::to_string(number);
    const double p = NumberField(object, "p", where);
    const double y = NumberField(object, "y", where);
    if (y != 0.0 && y != 1.0) Fail(number, "y must be 0 or 1");
    rows.samples.push_back({p, y == 1.0 ? 1 : 0});
    if (object.contains("w")) {
      any_weight = true;
      rows.weights.resize(rows.samples.size() - 1, 1.0);
      rows.weights.push_back(NumberField(object, "w", where));
    } else if (any_weight) {
      rows.weights.push_back(1.0);
    }
  }
  if (rows.samples.empty()) throw ParseError("input has no records");
  if (any_weight) rows.weights.resize(rows.samples.size(), 1.0);
  return FromSamples(rows.samples, rows.weights);
}

FiniteInstance ReadInstanceJson(std::istream& in) {
  const json doc = ParseJson(in);
  if (!doc.is_array()) throw ParseError("instance must be a JSON array");
  std::vector<InstancePoint> points;
  points.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    const std::string where = "point " + std::to_string(i);
    if (!item.is_object()) throw ParseError(where + ": expected an object");
    InstancePoint point;
    auto id = item.find("id");
    if (id == item.end()) {
      point.id = std::to_string(i);
    } else if (id->is_string()) {
      point.id = id->get<std::string>();
    } else {
      point.id = id->dump();
    }
    point.mass = NumberField(item, "mass", where);
    point.pred = NumberField(item, "pred", where);
    point.cond_mean = NumberField(item, "cond_mean", where);
    points.push_back(std::move(point));
  }
  return FiniteInstance::Create(std::move(points));
}

DecisionTask ReadTaskJson(std::istream& in) {
  const json doc = ParseJson(in);
  if (!doc.is_object() || !doc.contains("payoff") || !doc["payoff"].is_array()) {
    throw ParseError("task must be an object with a 'payoff' array");
  }
  const json& payoff = doc["payoff"];
  std::vector<std::array<double, 2>> rows;
  for (std::size_t a = 0; a < payoff.size(); ++a) {
    const json& row = payoff[a];
    if (!row.is_array() || row.size() != 2 || !row[0].is_number() ||
        !row[1].is_number()) {
      throw ParseError("payoff row " + std::to_string(a) +
                       " must be [u(a,0), u(a,1)]");
    }
    rows.push_back({row[0].get<double>(), row[1].get<double>()});
  }
  std::vector<std::string> actions;
  if (doc.contains("actions")) {
    if (!doc["actions"].is_array()) throw ParseError("'actions' must be an array");
    for (const json& action : doc["actions"]) {
      actions.push_back(action.is_string() ? action.get<std::string>()
                                           : action.dump());
    }
  } else {
    for (std::size_t a = 0; a < rows.size(); ++a) actions.push_back(std::to_string(a));
  }
  return DecisionTask::Create(std::move(actions), std::move(rows));
}

Transcript ReadTranscriptCsv(std::istream& in) {
  Rows rows = ReadCsvRows(in, false);
  std::vector<Round> rounds;
  rounds.reserve(rows.samples.size());
  for (const Sample& s : rows.samples) rounds.push_back({s.prediction, s.label});
  return Transcript::Create(std::move(rounds));
}

void WriteInstanceJson(std::ostream& out, const FiniteInstance& instance) {
  out << "[\n";
  const auto& points = instance.points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const InstancePoint& p = points[i];
    out << "  {\"id\": " << json(p.id).dump()
        << ", \"mass\": " << internal::FullNumber(p.mass)
        << ", \"pred\": " << internal::FullNumber(p.pred)
        << ", \"cond_mean\": " << internal::FullNumber(p.cond_mean) << "}"
        << (i + 1 < points.size() ? ",\n" : "\n");
  }
  out << "]\n";
}

void WriteSamplesCsv(std::ostream& out, const EmpiricalJoint& joint) {
  out << "prediction,label,weight\n";
  for (const Atom& atom : joint.atoms()) {
    out << internal::FullNumber(atom.v) << ',' << atom.y << ','
        << internal::FullNumber(atom.mass) << '\n';
  }
}

void WriteTranscriptCsv(std::ostream& out, const Transcript& transcript) {
  out << "prediction,label\n";
  for (const Round& round : transcript.rounds()) {
    out << internal::FullNumber(round.p) << ',' << round.y << '\n';
  }
}

}  // namespace calib
