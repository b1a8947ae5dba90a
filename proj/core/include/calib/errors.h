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

#ifndef CALIB_ERRORS_H_
#define CALIB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace calib {

// Input violates a documented precondition (range, shape, emptiness).
class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input text or file could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A measure identifier was not recognized.
class UnknownMeasureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive oracle was asked to enumerate more than its size cap allows.
class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace calib

#endif  // CALIB_ERRORS_H_
