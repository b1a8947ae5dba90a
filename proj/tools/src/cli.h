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

#ifndef CALIB_TOOLS_CLI_H_
#define CALIB_TOOLS_CLI_H_

#include <iosfwd>

namespace calib::tools {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCheck = 1;  // --verify-relations or --check
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitUnknownMeasure = 3;
inline constexpr int kExitOracleCap = 4;

// Runs `calib <subcommand> ...` writing results to `out` (unless --output
// names a file) and diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace calib::tools

#endif  // CALIB_TOOLS_CLI_H_
