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

#ifndef CSG_METRICS_H_
#define CSG_METRICS_H_

#include <span>
#include <vector>

#include "csg/types.h"

namespace csg {

// Fraction of nodes in `index` where predicted and true labels agree.
// Throws ValidationError on an empty index set.
double Accuracy(std::span<const int> predicted, std::span<const int> truth,
                std::span<const NodeId> index);

double Mean(std::span<const double> values);
// Sample standard deviation (n - 1); zero for fewer than two values.
double StdDev(std::span<const double> values);
double Median(std::vector<double> values);

}  // namespace csg

#endif  // CSG_METRICS_H_
