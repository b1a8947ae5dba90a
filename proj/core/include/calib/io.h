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

#ifndef CALIB_IO_H_
#define CALIB_IO_H_

// Readers and writers for the on-disk formats. Readers throw ParseError on
// malformed text and InvalidArgumentError on well-formed but invalid values.
//
//   samples CSV    header `prediction,label` or `prediction,label,weight`
//   samples JSONL  one {"p": float, "y": 0|1, "w": float?} per line
//   instance JSON  [{"id": str, "mass": float, "pred": float,
//                    "cond_mean": float}, ...]
//   task JSON      {"actions": [...], "payoff": [[u(a,0), u(a,1)], ...]}

#include <iosfwd>

#include "calib/decision.h"
#include "calib/empirical.h"
#include "calib/online.h"

namespace calib {

EmpiricalJoint ReadSamplesCsv(std::istream& in);
EmpiricalJoint ReadSamplesJsonl(std::istream& in);
FiniteInstance ReadInstanceJson(std::istream& in);
DecisionTask ReadTaskJson(std::istream& in);
// Samples CSV without weights, in row order.
Transcript ReadTranscriptCsv(std::istream& in);

// Numbers are written with 17 significant digits.
void WriteInstanceJson(std::ostream& out, const FiniteInstance& instance);
// One weighted row per atom.
void WriteSamplesCsv(std::ostream& out, const EmpiricalJoint& joint);
void WriteTranscriptCsv(std::ostream& out, const Transcript& transcript);

}  // namespace calib

#endif  // CALIB_IO_H_
