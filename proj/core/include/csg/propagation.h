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

#ifndef CSG_PROPAGATION_H_
#define CSG_PROPAGATION_H_

#include <functional>
#include <span>

#include "csg/graph.h"
#include "csg/types.h"

namespace csg {

// Stop when the largest absolute entry change between successive iterates
// is <= tol, or after max_iters synchronous sweeps.
struct StopRule {
  int max_iters = 100;
  double tol = 1e-6;

  void Validate() const;
};

struct SpreadParams {
  // Weight on the propagated term; mu = 1/alpha - 1 in the regularized
  // least-squares view. Must lie in [0, 1).
  double alpha = 0.9;
  StopRule stop;

  void Validate() const;
  // Fidelity weight of the equivalent quadratic objective (infinite at 0).
  double Mu() const;
};

struct PropagationResult {
  Matrix values;
  int iterations = 0;
  double final_delta = 0.0;
  bool converged = false;
};

// Invoked after every sweep with the 1-based iteration count and the new
// iterate. Used by tests to check per-iterate properties.
using IterateObserver = std::function<void(int, const Matrix&)>;

// Label spreading: iterates M <- (1 - alpha) * init + alpha * S * M starting
// from M = init. `op` must be a kSymNorm operator. Non-convergence is
// reported through `converged`, not an exception.
PropagationResult LabelSpread(const GraphOperator& op, const Matrix& init,
                              const SpreadParams& params,
                              const IterateObserver& observer = {});

// Fixed diffusion: rows in `fixed` stay equal to init; every other row is
// replaced by the neighbor average (P * M) each sweep. `op` must be
// kRowStochastic. params.alpha is ignored.
PropagationResult FixedDiffusion(const GraphOperator& op, const Matrix& init,
                                 std::span<const NodeId> fixed,
                                 const StopRule& stop,
                                 const IterateObserver& observer = {});

// Closed-form solutions by dense LU factorization, for cross-checking the
// iterations on small graphs. Throws ValidationError above max_nodes.
struct DenseOracleOptions {
  NodeId max_nodes = 200;
};

// (1 - alpha) * (I - alpha * S)^{-1} * init.
Matrix DenseSpreadSolve(const GraphOperator& op, const Matrix& init,
                        double alpha, const DenseOracleOptions& options = {});

// Harmonic extension: fixed rows copied from init; free rows reachable from
// a fixed row solve (I - P_ff) X_f = P_fl X_l; free rows with no path to a
// fixed row are zero (the iteration's limit when they start at zero).
Matrix DenseFixedSolve(const GraphOperator& op, const Matrix& init,
                       std::span<const NodeId> fixed,
                       const DenseOracleOptions& options = {});

}  // namespace csg

#endif  // CSG_PROPAGATION_H_
