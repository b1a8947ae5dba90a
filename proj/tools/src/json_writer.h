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

#ifndef CALIB_TOOLS_JSON_WRITER_H_
#define CALIB_TOOLS_JSON_WRITER_H_

#include <iosfwd>

#include "json.hpp"

namespace calib::tools {

using Json = nlohmann::ordered_json;

// Pretty-prints with two-space indentation. Floats get 17 significant
// digits so that equal values always print identically; non-finite floats
// become null.
void WriteJson(std::ostream& out, const Json& value);

}  // namespace calib::tools

#endif  // CALIB_TOOLS_JSON_WRITER_H_
