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

#include "csg/spectral.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "csg/errors.h"
#include "csg/matrix_io.h"
#include "csg/parallel.h"
#include "csg/random.h"

namespace csg {
namespace {

using ColMatrix = Eigen::MatrixXd;

// Fills `v` with a random vector orthonormal to the first `existing` columns
// of `basis`. Returns false if no such direction could be found.
bool RandomOrthonormal(const ColMatrix& basis, int existing, Rng& rng,
                       Eigen::Ref<Eigen::VectorXd> v) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.Uniform(-1.0, 1.0);
    for (int pass = 0; pass < 2 && existing > 0; ++pass) {
      Eigen::VectorXd h = basis.leftCols(existing).transpose() * v;
      v.noalias() -= basis.leftCols(existing) * h;
    }
    const double norm = v.norm();
    if (norm > 1e-8) {
      v /= norm;
      return true;
    }
  }
  return false;
}

void FixSigns(Matrix& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      const double x = vectors(i, j);
      if (std::abs(x) > 1e-12) {
        if (x < 0) vectors.col(j) *= -1.0;
        break;
      }
    }
  }
}

std::string FormatTau(double tau) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", tau);
  return buf;
}

}  // namespace

RegularizedOperator::RegularizedOperator(
    std::shared_ptr<const SparseGraph> graph, std::optional<double> tau)
    : graph_(std::move(graph)) {
  if (!graph_) throw ValidationError("regularized operator requires a graph");
  tau_ = tau.value_or(graph_->AverageDegree());
  if (!(tau_ >= 0.0)) throw ValidationError("tau must be non-negative");
  const NodeId n = graph_->num_nodes();
  scale_.assign(n, 0.0);
  auto degrees = graph_->degrees();
  for (NodeId i = 0; i < n; ++i) {
    const double d = degrees[i] + tau_;
    scale_[i] = d > 0.0 ? 1.0 / std::sqrt(d) : 0.0;
  }
}

void RegularizedOperator::Apply(std::span<const double> x,
                                std::span<double> y) const {
  const NodeId n = size();
  if (static_cast<NodeId>(x.size()) != n || static_cast<NodeId>(y.size()) != n) {
    throw ValidationError("regularized matvec: expected length " +
                          std::to_string(n));
  }
  // Rank-one part: (tau / n) * (s . x) * s.
  double sx = 0.0;
  for (NodeId i = 0; i < n; ++i) sx += scale_[i] * x[i];
  const double rank_one = n > 0 ? tau_ / n * sx : 0.0;

  const auto offsets = graph_->row_offsets();
  const auto indices = graph_->col_indices();
#pragma omp parallel for schedule(static) num_threads(NumThreads())
  for (NodeId i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::int64_t e = offsets[i]; e < offsets[i + 1]; ++e) {
      acc += scale_[indices[e]] * x[indices[e]];
    }
    y[i] = scale_[i] * (acc + rank_one);
  }
}

Vector RegularizedOperator::Apply(const Vector& x) const {
  Vector y(x.size());
  Apply(std::span<const double>(x.data(), x.size()),
        std::span<double>(y.data(), y.size()));
  return y;
}

Matrix RegularizedOperator::ToDense() const {
  const NodeId n = size();
  Matrix dense(n, n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      dense(i, j) = scale_[i] * (tau_ / n) * scale_[j];
    }
    for (NodeId j : graph_->Neighbors(i)) {
      dense(i, j) += scale_[i] * scale_[j];
    }
  }
  return dense;
}

Vector RegMatvec(const RegularizedOperator& op, const Vector& x) {
  return op.Apply(x);
}

SpectralEmbedding TopEigenpairs(const RegularizedOperator& op,
                                const EigenSolverOptions& options) {
  const int n = op.size();
  const int k = options.k;
  if (k < 1 || k >= n) {
    throw ValidationError("need 1 <= k < n for the eigensolver (k=" +
                          std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  if (!(options.tol > 0.0)) throw ValidationError("eigensolver tol must be > 0");

  int m = options.basis_size > 0 ? options.basis_size : 2 * k + 20;
  m = std::min(n, std::max(m, k + 2));
  const int budget =
      options.max_iters > 0 ? options.max_iters : 50 * m;

  Rng rng(options.seed);
  ColMatrix basis = ColMatrix::Zero(n, m + 1);
  Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(m, m);
  if (!RandomOrthonormal(basis, 0, rng, basis.col(0))) {
    throw ConvergenceError("could not draw a start vector");
  }

  Eigen::VectorXd w(n);
  int kept = 0;
  int steps = 0;
  double worst_residual = 0.0;
  while (true) {
    double beta = 0.0;
    for (int j = kept; j < m; ++j) {
      op.Apply(std::span<const double>(basis.col(j).data(), n),
               std::span<double>(w.data(), n));
      ++steps;
      // Full reorthogonalization: classical Gram-Schmidt applied twice.
      Eigen::VectorXd h = basis.leftCols(j + 1).transpose() * w;
      w.noalias() -= basis.leftCols(j + 1) * h;
      Eigen::VectorXd h2 = basis.leftCols(j + 1).transpose() * w;
      w.noalias() -= basis.leftCols(j + 1) * h2;
      h += h2;
      for (int i = 0; i <= j; ++i) {
        projected(i, j) = h(i);
        projected(j, i) = h(i);
      }
      beta = w.norm();
      if (j + 1 >= n) {
        // The basis spans the whole space; nothing is left to add.
        beta = 0.0;
        basis.col(j + 1).setZero();
      } else if (beta <= 1e-10) {
        // Invariant subspace found: continue from a fresh direction.
        beta = 0.0;
        if (!RandomOrthonormal(basis, j + 1, rng, basis.col(j + 1))) {
          basis.col(j + 1).setZero();
        }
      } else {
        basis.col(j + 1) = w / beta;
      }
      if (j + 1 < m) {
        projected(j + 1, j) = beta;
        projected(j, j + 1) = beta;
      }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(projected);
    const Eigen::VectorXd& theta = ritz.eigenvalues();  // ascending
    const Eigen::MatrixXd& y = ritz.eigenvectors();

    worst_residual = 0.0;
    for (int i = 0; i < k; ++i) {
      const int r = m - 1 - i;
      worst_residual = std::max(worst_residual, std::abs(beta * y(m - 1, r)));
    }

    if (worst_residual <= options.tol) {
      SpectralEmbedding out;
      out.values.resize(k);
      ColMatrix top(m, k);
      for (int i = 0; i < k; ++i) {
        out.values(i) = theta(m - 1 - i);
        top.col(i) = y.col(m - 1 - i);
      }
      ColMatrix vectors = basis.leftCols(m) * top;
      // Confirm against explicit residuals; the estimate can be optimistic
      // after rounding.
      double explicit_worst = 0.0;
      Eigen::VectorXd mv(n);
      for (int i = 0; i < k; ++i) {
        mv = op.Apply(Vector(vectors.col(i)));
        explicit_worst = std::max(
            explicit_worst, (mv - out.values(i) * vectors.col(i)).norm());
      }
      if (explicit_worst <= options.tol) {
        out.vectors = vectors;
        FixSigns(out.vectors);
        return out;
      }
      worst_residual = explicit_worst;
    }

    if (steps >= budget || m == n) {
      throw ConvergenceError(
          "eigensolver did not reach residual " + std::to_string(options.tol) +
          " within " + std::to_string(steps) +
          " Lanczos steps (worst residual " + std::to_string(worst_residual) +
          ", k=" + std::to_string(k) + ", basis=" + std::to_string(m) + ")");
    }

    // Thick restart: keep the p leading Ritz vectors plus the residual
    // direction, which couples to them through beta * last-row(y).
    const int p = std::min(m - 1, k + (m - k) / 2);
    Eigen::MatrixXd keep(m, p);
    for (int i = 0; i < p; ++i) keep.col(i) = y.col(m - 1 - i);
    ColMatrix restarted = basis.leftCols(m) * keep;
    Eigen::VectorXd residual_dir = basis.col(m);
    basis.leftCols(p) = restarted;
    basis.col(p) = residual_dir;
    projected.setZero();
    for (int i = 0; i < p; ++i) {
      projected(i, i) = theta(m - 1 - i);
      const double coupling = beta * keep(m - 1, i);
      projected(p, i) = coupling;
      projected(i, p) = coupling;
    }
    kept = p;
  }
}

const char* ToString(FeatureMode mode) {
  switch (mode) {
    case FeatureMode::kRawOnly:
      return "raw";
    case FeatureMode::kSpectralOnly:
      return "spectral";
    case FeatureMode::kConcat:
      return "concat";
  }
  return "unknown";
}

FeatureMode ParseFeatureMode(const std::string& text) {
  if (text == "raw" || text == "raw_only") return FeatureMode::kRawOnly;
  if (text == "spectral" || text == "spectral_only") {
    return FeatureMode::kSpectralOnly;
  }
  if (text == "concat") return FeatureMode::kConcat;
  throw ValidationError("unknown feature mode '" + text + "'");
}

void StandardizeColumns(Matrix& features) {
  const Eigen::Index n = features.rows();
  if (n == 0) return;
  for (Eigen::Index j = 0; j < features.cols(); ++j) {
    auto col = features.col(j);
    const double mean = col.mean();
    col.array() -= mean;
    const double stddev = std::sqrt(col.squaredNorm() / n);
    if (stddev > 1e-12) {
      col /= stddev;
    } else {
      col.setZero();
    }
  }
}

Matrix AugmentFeatures(const std::optional<Matrix>& raw,
                       const SpectralEmbedding* embedding, FeatureMode mode) {
  const bool need_raw = mode != FeatureMode::kSpectralOnly;
  const bool need_spectral = mode != FeatureMode::kRawOnly;
  if (need_raw && (!raw || raw->cols() == 0)) {
    throw ValidationError(std::string("feature mode '") + ToString(mode) +
                          "' needs raw features, but the dataset has none");
  }
  if (need_spectral && embedding == nullptr) {
    throw ValidationError(std::string("feature mode '") + ToString(mode) +
                          "' needs a spectral embedding");
  }
  if (need_raw && need_spectral &&
      raw->rows() != embedding->vectors.rows()) {
    throw ValidationError("raw features and embedding disagree on node count");
  }
  Matrix out;
  if (mode == FeatureMode::kRawOnly) {
    out = *raw;
  } else if (mode == FeatureMode::kSpectralOnly) {
    out = embedding->vectors;
  } else {
    out.resize(raw->rows(), raw->cols() + embedding->vectors.cols());
    out.leftCols(raw->cols()) = *raw;
    out.rightCols(embedding->vectors.cols()) = embedding->vectors;
  }
  StandardizeColumns(out);
  return out;
}

std::filesystem::path EmbeddingCachePath(const std::filesystem::path& dir,
                                         std::uint64_t graph_fingerprint,
                                         double tau, int k,
                                         std::uint64_t seed) {
  std::ostringstream name;
  name << "spectral_" << std::hex << graph_fingerprint << std::dec << "_tau"
       << FormatTau(tau) << "_k" << k << "_seed" << seed << ".bin";
  return dir / name.str();
}

void SaveEmbedding(const std::filesystem::path& path,
                   const SpectralEmbedding& embedding) {
  WriteMatrix(path, embedding.vectors, MatrixFormat::kBinary);
  std::filesystem::path values_path = path;
  values_path += ".values";
  std::ofstream out(values_path);
  if (!out) throw ValidationError("cannot write " + values_path.string());
  out.precision(17);
  for (Eigen::Index i = 0; i < embedding.values.size(); ++i) {
    out << embedding.values(i) << '\n';
  }
}

std::optional<SpectralEmbedding> LoadEmbedding(
    const std::filesystem::path& path) {
  std::filesystem::path values_path = path;
  values_path += ".values";
  if (!std::filesystem::exists(path) || !std::filesystem::exists(values_path)) {
    return std::nullopt;
  }
  SpectralEmbedding emb;
  emb.vectors = ReadMatrix(path);
  std::ifstream in(values_path);
  std::vector<double> values;
  double v = 0.0;
  while (in >> v) values.push_back(v);
  if (static_cast<Eigen::Index>(values.size()) != emb.vectors.cols()) {
    return std::nullopt;
  }
  emb.values = Eigen::Map<Vector>(values.data(), values.size());
  return emb;
}

SpectralEmbedding ComputeOrLoadEmbedding(
    const RegularizedOperator& op, const EigenSolverOptions& options,
    const std::filesystem::path& cache_dir) {
  if (cache_dir.empty()) return TopEigenpairs(op, options);
  const auto path = EmbeddingCachePath(cache_dir, op.graph().Fingerprint(),
                                       op.tau(), options.k, options.seed);
  if (auto cached = LoadEmbedding(path);
      cached && cached->vectors.rows() == op.size()) {
    return *cached;
  }
  SpectralEmbedding emb = TopEigenpairs(op, options);
  std::filesystem::create_directories(cache_dir);
  SaveEmbedding(path, emb);
  return emb;
}

}  // namespace csg
