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

#ifndef CALIB_BASIC_MEASURES_H_
#define CALIB_BASIC_MEASURES_H_

#include "calib/empirical.h"

namespace calib {

// Expected calibration error: sum over level sets of mass * |p-hat(v) - v|.
double Ece(const EmpiricalJoint& joint);

// (E |p-hat(v) - v|^q)^(1/q). Throws InvalidArgumentError for q < 1.
double EceQ(const EmpiricalJoint& joint, double q);

// Total variation distance between the joint and its surrogate, where the
// surrogate relabels each prediction v with a Bernoulli(v) label. Computed
// atom by atom over the union support; agrees with Ece.
double TvCharacterization(const EmpiricalJoint& joint);

// Bucketed ECE: b equal buckets [(j-1)/b, j/b) with the last one closed; every
// prediction is rounded to its bucket midpoint before taking the ECE.
// Throws InvalidArgumentError for b == 0.
double BinnedEce(const EmpiricalJoint& joint, unsigned b);

}  // namespace calib

#endif  // CALIB_BASIC_MEASURES_H_
