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

#include "csg/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "csg/errors.h"

namespace csg {

double Accuracy(std::span<const int> predicted, std::span<const int> truth,
                std::span<const NodeId> index) {
  if (index.empty()) throw ValidationError("accuracy over an empty index set");
  std::int64_t hits = 0;
  for (NodeId u : index) {
    if (u < 0 || static_cast<std::size_t>(u) >= predicted.size() ||
        static_cast<std::size_t>(u) >= truth.size()) {
      throw ValidationError("accuracy index " + std::to_string(u) +
                            " out of range");
    }
    if (truth[u] < 0) {
      throw ValidationError("node " + std::to_string(u) +
                            " has no true label");
    }
    hits += predicted[u] == truth[u];
  }
  return static_cast<double>(hits) / static_cast<double>(index.size());
}

double Mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double StdDev(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double mean = Mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace csg
