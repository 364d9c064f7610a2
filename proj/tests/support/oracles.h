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

#ifndef CSG_TESTS_SUPPORT_ORACLES_H_
#define CSG_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "csg/graph.h"
#include "csg/types.h"

// Dense reference computations assembled directly from edge lists, kept
// independent of the library's operators.
namespace csg::testing {

// D^{-1/2} A D^{-1/2}.
Eigen::MatrixXd DenseSymNorm(const SparseGraph& g);

// (1 - alpha)(I - alpha S)^{-1} Y.
Matrix SpreadOracle(const SparseGraph& g, const Matrix& y, double alpha);

// Harmonic extension on a connected graph: fixed rows copied from y, free
// rows equal to the mean of their neighbors.
Matrix FixedOracle(const SparseGraph& g, const Matrix& y,
                   const std::vector<char>& fixed);

// D_tau^{-1/2} (A + tau/n 11^T) D_tau^{-1/2}.
Eigen::MatrixXd DenseRegularized(const SparseGraph& g, double tau);

// Random graph on 4..max_n nodes plus a spanning path 0-1-...-(n-1).
std::shared_ptr<const SparseGraph> ConnectedSmallGraph(std::uint64_t seed,
                                                       NodeId max_n = 50);

}  // namespace csg::testing

#endif  // CSG_TESTS_SUPPORT_ORACLES_H_
