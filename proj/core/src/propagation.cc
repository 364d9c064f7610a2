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

#include "csg/propagation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/LU>

#include "csg/errors.h"
#include "csg/parallel.h"

namespace csg {
namespace {

void CheckRows(const GraphOperator& op, const Matrix& init) {
  if (init.rows() != op.size()) {
    throw ValidationError("initial matrix has " + std::to_string(init.rows()) +
                          " rows, graph has " + std::to_string(op.size()) +
                          " nodes");
  }
}

void CheckKind(const GraphOperator& op, OperatorKind want, const char* who) {
  if (op.kind() != want) {
    throw ValidationError(std::string(who) + " requires a " + ToString(want) +
                          " operator, got " + ToString(op.kind()));
  }
}

double MaxAbsDiff(const Matrix& a, const Matrix& b) {
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

std::vector<char> MembershipMask(NodeId n, std::span<const NodeId> nodes) {
  std::vector<char> mask(n, 0);
  for (NodeId v : nodes) {
    if (v < 0 || v >= n) {
      throw ValidationError("fixed node " + std::to_string(v) +
                            " outside [0, " + std::to_string(n) + ")");
    }
    mask[v] = 1;
  }
  return mask;
}

}  // namespace

void StopRule::Validate() const {
  if (max_iters <= 0) throw ValidationError("max_iters must be positive");
  if (!(tol >= 0.0)) throw ValidationError("tol must be non-negative");
}

void SpreadParams::Validate() const {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw ValidationError("alpha must lie in [0, 1), got " +
                          std::to_string(alpha));
  }
  stop.Validate();
}

double SpreadParams::Mu() const {
  if (alpha == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / alpha - 1.0;
}

PropagationResult LabelSpread(const GraphOperator& op, const Matrix& init,
                              const SpreadParams& params,
                              const IterateObserver& observer) {
  params.Validate();
  CheckKind(op, OperatorKind::kSymNorm, "label spreading");
  CheckRows(op, init);

  const double alpha = params.alpha;
  PropagationResult result;
  Matrix current = init;
  Matrix propagated;
  Matrix next(init.rows(), init.cols());
  for (int t = 1; t <= params.stop.max_iters; ++t) {
    op.Apply(current, propagated);
    next.noalias() = (1.0 - alpha) * init + alpha * propagated;
    result.final_delta = MaxAbsDiff(next, current);
    current.swap(next);
    result.iterations = t;
    if (observer) observer(t, current);
    if (result.final_delta <= params.stop.tol) {
      result.converged = true;
      break;
    }
  }
  result.values = std::move(current);
  return result;
}

PropagationResult FixedDiffusion(const GraphOperator& op, const Matrix& init,
                                 std::span<const NodeId> fixed,
                                 const StopRule& stop,
                                 const IterateObserver& observer) {
  stop.Validate();
  CheckKind(op, OperatorKind::kRowStochastic, "fixed diffusion");
  CheckRows(op, init);
  const NodeId n = op.size();
  const std::vector<char> is_fixed = MembershipMask(n, fixed);

  PropagationResult result;
  Matrix current = init;
  Matrix next;
  for (int t = 1; t <= stop.max_iters; ++t) {
    op.Apply(current, next);
    double delta = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      if (is_fixed[i]) {
        next.row(i) = init.row(i);
      } else if (next.cols() > 0) {
        delta = std::max(delta,
                         (next.row(i) - current.row(i)).cwiseAbs().maxCoeff());
      }
    }
    current.swap(next);
    result.iterations = t;
    result.final_delta = delta;
    if (observer) observer(t, current);
    if (delta <= stop.tol) {
      result.converged = true;
      break;
    }
  }
  result.values = std::move(current);
  return result;
}

Matrix DenseSpreadSolve(const GraphOperator& op, const Matrix& init,
                        double alpha, const DenseOracleOptions& options) {
  CheckKind(op, OperatorKind::kSymNorm, "dense spreading oracle");
  CheckRows(op, init);
  if (op.size() > options.max_nodes) {
    throw ValidationError("dense oracle capped at " +
                          std::to_string(options.max_nodes) + " nodes");
  }
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw ValidationError("alpha must lie in [0, 1)");
  }
  const NodeId n = op.size();
  Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(n, n) - alpha * Eigen::MatrixXd(op.ToDense());
  Eigen::MatrixXd rhs = (1.0 - alpha) * Eigen::MatrixXd(init);
  return Matrix(system.partialPivLu().solve(rhs));
}

Matrix DenseFixedSolve(const GraphOperator& op, const Matrix& init,
                       std::span<const NodeId> fixed,
                       const DenseOracleOptions& options) {
  CheckKind(op, OperatorKind::kRowStochastic, "dense fixed-diffusion oracle");
  CheckRows(op, init);
  if (op.size() > options.max_nodes) {
    throw ValidationError("dense oracle capped at " +
                          std::to_string(options.max_nodes) + " nodes");
  }
  const NodeId n = op.size();
  const SparseGraph& g = op.graph();
  const std::vector<char> is_fixed = MembershipMask(n, fixed);

  // Free nodes connected (through free nodes) to at least one fixed node.
  std::vector<char> reached(n, 0);
  std::vector<NodeId> stack;
  for (NodeId v = 0; v < n; ++v) {
    if (!is_fixed[v]) continue;
    for (NodeId u : g.Neighbors(v)) {
      if (!is_fixed[u] && !reached[u]) {
        reached[u] = 1;
        stack.push_back(u);
      }
    }
  }
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId w : g.Neighbors(u)) {
      if (!is_fixed[w] && !reached[w]) {
        reached[w] = 1;
        stack.push_back(w);
      }
    }
  }

  std::vector<NodeId> free_nodes;
  std::vector<Eigen::Index> position(n, -1);
  for (NodeId v = 0; v < n; ++v) {
    if (reached[v]) {
      position[v] = static_cast<Eigen::Index>(free_nodes.size());
      free_nodes.push_back(v);
    }
  }

  Matrix out = Matrix::Zero(n, init.cols());
  for (NodeId v = 0; v < n; ++v) {
    if (is_fixed[v]) out.row(v) = init.row(v);
  }
  if (free_nodes.empty()) return out;

  const Matrix dense = op.ToDense();
  const Eigen::Index m = static_cast<Eigen::Index>(free_nodes.size());
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(m, m);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(m, init.cols());
  for (Eigen::Index a = 0; a < m; ++a) {
    const NodeId i = free_nodes[a];
    for (NodeId j = 0; j < n; ++j) {
      const double p = dense(i, j);
      if (p == 0.0) continue;
      if (is_fixed[j]) {
        rhs.row(a) += p * init.row(j);
      } else if (position[j] >= 0) {
        system(a, position[j]) -= p;
      }
    }
  }
  Eigen::MatrixXd solved = system.partialPivLu().solve(rhs);
  for (Eigen::Index a = 0; a < m; ++a) out.row(free_nodes[a]) = solved.row(a);
  return out;
}

}  // namespace csg
