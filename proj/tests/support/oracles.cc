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

#include "oracles.h"

#include <cmath>

#include "synthetic.h"

namespace csg::testing {

Eigen::MatrixXd DenseSymNorm(const SparseGraph& g) {
  const NodeId n = g.num_nodes();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.Edges()) {
    const double w = 1.0 / std::sqrt(g.Degree(e.u) * g.Degree(e.v));
    s(e.u, e.v) = w;
    s(e.v, e.u) = w;
  }
  return s;
}

Matrix SpreadOracle(const SparseGraph& g, const Matrix& y, double alpha) {
  const NodeId n = g.num_nodes();
  const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - alpha * DenseSymNorm(g);
  return (1.0 - alpha) * lhs.fullPivLu().solve(Eigen::MatrixXd(y));
}

Matrix FixedOracle(const SparseGraph& g, const Matrix& y,
                   const std::vector<char>& fixed) {
  const NodeId n = g.num_nodes();
  Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, y.cols());
  for (NodeId i = 0; i < n; ++i) {
    if (fixed[i]) {
      rhs.row(i) = y.row(i);
      continue;
    }
    for (NodeId j : g.Neighbors(i)) lhs(i, j) -= 1.0 / g.Degree(i);
  }
  return lhs.fullPivLu().solve(rhs);
}

Eigen::MatrixXd DenseRegularized(const SparseGraph& g, double tau) {
  const NodeId n = g.num_nodes();
  Eigen::MatrixXd a = Eigen::MatrixXd::Constant(n, n, tau / n);
  for (const Edge& e : g.Edges()) {
    a(e.u, e.v) += 1.0;
    a(e.v, e.u) += 1.0;
  }
  Eigen::VectorXd s(n);
  for (NodeId i = 0; i < n; ++i) s(i) = 1.0 / std::sqrt(g.Degree(i) + tau);
  return s.asDiagonal() * a * s.asDiagonal();
}

std::shared_ptr<const SparseGraph> ConnectedSmallGraph(std::uint64_t seed, NodeId max_n) {
  auto g = RandomSmallGraph(4, max_n, seed);
  std::vector<Edge> edges = g->Edges();
  for (NodeId u = 0; u + 1 < g->num_nodes(); ++u) edges.push_back({u, u + 1});
  return std::make_shared<const SparseGraph>(SparseGraph::FromEdges(edges, g->num_nodes()));
}

}  // namespace csg::testing
