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

#include "json_writer.h"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace calib::tools {
namespace {

void Indent(std::ostream& out, int depth) {
  for (int i = 0; i < depth; ++i) out << "  ";
}

void Write(std::ostream& out, const Json& value, int depth) {
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      std::size_t i = 0;
      for (const auto& [key, item] : value.items()) {
        Indent(out, depth + 1);
        out << Json(key).dump() << ": ";
        Write(out, item, depth + 1);
        out << (++i < value.size() ? ",\n" : "\n");
      }
      Indent(out, depth);
      out << '}';
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line; curves read better that way.
      bool flat = true;
      for (const auto& item : value) flat = flat && item.is_primitive();
      if (flat) {
        out << '[';
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i) out << ", ";
          Write(out, value[i], depth + 1);
        }
        out << ']';
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        Indent(out, depth + 1);
        Write(out, value[i], depth + 1);
        out << (i + 1 < value.size() ? ",\n" : "\n");
      }
      Indent(out, depth);
      out << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = value.get<double>();
      if (!std::isfinite(x)) {
        out << "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", x);
      std::string text = buf;
      // Keep floats recognizable as floats.
      if (text.find_first_of(".en") == std::string::npos) text += ".0";
      out << text;
      return;
    }
    default:
      out << value.dump();
  }
}

}  // namespace

void WriteJson(std::ostream& out, const Json& value) {
  Write(out, value, 0);
  out << '\n';
}

}  // namespace calib::tools
