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

#ifndef CSG_SPECTRAL_H_
#define CSG_SPECTRAL_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "csg/graph.h"
#include "csg/types.h"

namespace csg {

// Implicit form of
//
//   M = D_tau^{-1/2} (A + (tau / n) 1 1^T) D_tau^{-1/2},  D_tau = D + tau I.
//
// The rank-one term is never materialized, so a product costs O(|E| + n).
class RegularizedOperator {
 public:
  // tau defaults to the average degree 2|E| / n.
  explicit RegularizedOperator(std::shared_ptr<const SparseGraph> graph,
                               std::optional<double> tau = std::nullopt);

  NodeId size() const { return graph_->num_nodes(); }
  double tau() const { return tau_; }
  const SparseGraph& graph() const { return *graph_; }
  // Per-node 1 / sqrt(d_i + tau).
  std::span<const double> scale() const { return scale_; }

  void Apply(std::span<const double> x, std::span<double> y) const;
  Vector Apply(const Vector& x) const;

  // Dense materialization for small graphs (tests).
  Matrix ToDense() const;

 private:
  std::shared_ptr<const SparseGraph> graph_;
  double tau_ = 0.0;
  std::vector<double> scale_;
};

Vector RegMatvec(const RegularizedOperator& op, const Vector& x);

struct EigenSolverOptions {
  int k = 128;
  std::uint64_t seed = 0;
  // Required residual ||M v - lambda v||_2 for every returned pair.
  double tol = 1e-6;
  // Total Lanczos step budget; 0 selects 50 * basis.
  int max_iters = 0;
  // Krylov basis size per restart cycle; 0 selects min(n, 2k + 20).
  int basis_size = 0;
};

// Leading eigenpairs, eigenvalues in descending order. Each eigenvector is
// sign-fixed so that its first entry with magnitude above 1e-12 is positive.
struct SpectralEmbedding {
  Matrix vectors;  // n x k, orthonormal columns
  Vector values;   // k, non-increasing

  int k() const { return static_cast<int>(values.size()); }
};

// Thick-restart Lanczos with full reorthogonalization. Deterministic given
// the seed. Throws ConvergenceError if any of the k residuals stays above
// tol when the step budget runs out, ValidationError unless 1 <= k < n.
SpectralEmbedding TopEigenpairs(const RegularizedOperator& op,
                                const EigenSolverOptions& options);

enum class FeatureMode { kRawOnly, kSpectralOnly, kConcat };

const char* ToString(FeatureMode mode);
FeatureMode ParseFeatureMode(const std::string& text);

// Builds base-predictor inputs: raw features, the embedding, or both side by
// side, then standardizes every column to zero mean and unit variance over
// all n nodes (constant columns become zero).
Matrix AugmentFeatures(const std::optional<Matrix>& raw,
                       const SpectralEmbedding* embedding, FeatureMode mode);

void StandardizeColumns(Matrix& features);

// On-disk cache of embeddings keyed by graph fingerprint, tau, k and seed.
std::filesystem::path EmbeddingCachePath(const std::filesystem::path& dir,
                                         std::uint64_t graph_fingerprint,
                                         double tau, int k,
                                         std::uint64_t seed);
void SaveEmbedding(const std::filesystem::path& path,
                   const SpectralEmbedding& embedding);
std::optional<SpectralEmbedding> LoadEmbedding(
    const std::filesystem::path& path);

// Returns the cached embedding if present, else computes and stores it. An
// empty cache_dir disables caching.
SpectralEmbedding ComputeOrLoadEmbedding(const RegularizedOperator& op,
                                         const EigenSolverOptions& options,
                                         const std::filesystem::path& cache_dir);

}  // namespace csg

#endif  // CSG_SPECTRAL_H_
