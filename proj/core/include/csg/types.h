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

#ifndef CSG_TYPES_H_
#define CSG_TYPES_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace csg {

using NodeId = std::int32_t;

// Dense n x c matrices (class scores, distributions, residuals) are stored
// row-major so that one node's row is contiguous.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;

// Sentinel for nodes whose class is not known.
inline constexpr int kUnknownLabel = -1;

// A set of nodes together with their ground-truth classes. Stages that must
// not see test labels receive only these (train and validation) views.
struct LabeledNodes {
  std::vector<NodeId> nodes;
  std::vector<int> labels;

  std::size_t size() const { return nodes.size(); }
  bool empty() const { return nodes.empty(); }
};

// Gathers labels for `nodes` from a dense label vector.
LabeledNodes GatherLabels(std::span<const int> all_labels,
                          std::span<const NodeId> nodes);

// Index of the largest entry per row; ties resolve to the lowest column.
std::vector<int> ArgmaxRows(const Matrix& scores);

}  // namespace csg

#endif  // CSG_TYPES_H_
