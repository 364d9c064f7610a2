// Copyright 2026 The csgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSG_ERRORS_H_
#define CSG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace csg {

// Bad input: malformed files, inconsistent dimensions, invalid configs.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

// An iterative solver ran out of budget before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// Optimization diverged (NaN/Inf loss or parameters).
class TrainingError : public std::runtime_error {
 public:
  explicit TrainingError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace csg

#endif  // CSG_ERRORS_H_
