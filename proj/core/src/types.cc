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

#include "csg/types.h"

#include <string>

#include "csg/errors.h"

namespace csg {

LabeledNodes GatherLabels(std::span<const int> all_labels,
                          std::span<const NodeId> nodes) {
  LabeledNodes out;
  out.nodes.assign(nodes.begin(), nodes.end());
  out.labels.reserve(nodes.size());
  for (NodeId v : nodes) {
    if (v < 0 || static_cast<std::size_t>(v) >= all_labels.size()) {
      throw ValidationError("node " + std::to_string(v) +
                            " outside label vector");
    }
    if (all_labels[v] == kUnknownLabel) {
      throw ValidationError("node " + std::to_string(v) +
                            " has no label but was placed in a labeled set");
    }
    out.labels.push_back(all_labels[v]);
  }
  return out;
}

std::vector<int> ArgmaxRows(const Matrix& scores) {
  std::vector<int> out(scores.rows(), 0);
  for (Eigen::Index i = 0; i < scores.rows(); ++i) {
    int best = 0;
    for (Eigen::Index j = 1; j < scores.cols(); ++j) {
      if (scores(i, j) > scores(i, best)) best = static_cast<int>(j);
    }
    out[i] = best;
  }
  return out;
}

}  // namespace csg
