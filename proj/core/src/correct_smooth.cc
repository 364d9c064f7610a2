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

#include "csg/correct_smooth.h"

#include <chrono>
#include <cmath>
#include <string>

#include "csg/errors.h"

namespace csg {
namespace {

void CheckRowIds(const Matrix& z, std::span<const NodeId> nodes,
                 const char* what) {
  for (NodeId u : nodes) {
    if (u < 0 || u >= z.rows()) {
      throw ValidationError(std::string(what) + " node " + std::to_string(u) +
                            " outside [0, " + std::to_string(z.rows()) + ")");
    }
  }
}

void CheckLabeled(const Matrix& z, const LabeledNodes& rows,
                  const char* what) {
  if (rows.labels.size() != rows.nodes.size()) {
    throw ValidationError(std::string(what) + ": label/node count mismatch");
  }
  CheckRowIds(z, rows.nodes, what);
  for (int y : rows.labels) {
    if (y < 0 || y >= z.cols()) {
      throw ValidationError(std::string(what) + ": label " +
                            std::to_string(y) + " outside [0, " +
                            std::to_string(z.cols()) + ")");
    }
  }
}

void CheckOperator(const Matrix& z, const GraphOperator& op,
                   OperatorKind kind) {
  if (op.kind() != kind) {
    throw ValidationError(std::string("expected a ") + ToString(kind) +
                          " operator, got " + ToString(op.kind()));
  }
  if (op.size() != z.rows()) {
    throw ValidationError("prediction matrix has " + std::to_string(z.rows()) +
                          " rows but the graph has " +
                          std::to_string(op.size()) + " nodes");
  }
}

}  // namespace

Matrix OneHotRows(NodeId n, int num_classes, const LabeledNodes& rows) {
  Matrix y = Matrix::Zero(n, num_classes);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    y(rows.nodes[r], rows.labels[r]) = 1.0;
  }
  return y;
}

Matrix ResidualError(const Matrix& z, const LabeledNodes& train) {
  CheckLabeled(z, train, "train");
  Matrix e = Matrix::Zero(z.rows(), z.cols());
  for (std::size_t r = 0; r < train.size(); ++r) {
    const NodeId u = train.nodes[r];
    e.row(u) = z.row(u);
    e(u, train.labels[r]) -= 1.0;
  }
  return e;
}

const char* ToString(CorrectionVariant variant) {
  switch (variant) {
    case CorrectionVariant::kAutoscale:
      return "autoscale";
    case CorrectionVariant::kFDiffScale:
      return "fdiff";
    case CorrectionVariant::kNone:
      return "none";
  }
  return "?";
}

CorrectionVariant ParseCorrectionVariant(const std::string& text) {
  if (text == "autoscale") return CorrectionVariant::kAutoscale;
  if (text == "fdiff" || text == "fdiff-scale" || text == "fdiff_scale") {
    return CorrectionVariant::kFDiffScale;
  }
  if (text == "none") return CorrectionVariant::kNone;
  throw ValidationError("unknown correction variant '" + text + "'");
}

void CorrectionConfig::Validate() const {
  if (!(alpha_correct >= 0.0 && alpha_correct < 1.0)) {
    throw ValidationError("alpha_correct must lie in [0, 1)");
  }
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw ValidationError("scale s must be finite and non-negative");
  }
  if (!(epsilon_row > 0.0)) throw ValidationError("epsilon_row must be > 0");
  stop.Validate();
}

CorrectionResult CorrectAutoscale(const Matrix& z, const LabeledNodes& train,
                                  const GraphOperator& sym,
                                  const CorrectionConfig& config) {
  config.Validate();
  CheckOperator(z, sym, OperatorKind::kSymNorm);
  const Matrix e = ResidualError(z, train);

  CorrectionResult out;
  if (!train.empty()) {
    double total = 0.0;
    for (NodeId u : train.nodes) total += e.row(u).lpNorm<1>();
    out.sigma = total / static_cast<double>(train.size());
  }

  SpreadParams params;
  params.alpha = config.alpha_correct;
  params.stop = config.stop;
  PropagationResult spread = LabelSpread(sym, e, params);
  out.iterations = spread.iterations;
  out.converged = spread.converged;
  out.propagated = std::move(spread.values);

  std::vector<char> is_train(static_cast<std::size_t>(z.rows()), 0);
  for (NodeId u : train.nodes) is_train[u] = 1;
  out.corrected = z;
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    if (is_train[i]) {
      out.corrected.row(i) -= out.propagated.row(i);
      continue;
    }
    const double norm = out.propagated.row(i).lpNorm<1>();
    if (norm > config.epsilon_row) {
      out.corrected.row(i) -= (out.sigma / norm) * out.propagated.row(i);
    }
  }
  return out;
}

CorrectionResult CorrectFDiff(const Matrix& z, const LabeledNodes& train,
                              std::span<const NodeId> valid_nodes,
                              const GraphOperator& row_stochastic,
                              const CorrectionConfig& config) {
  config.Validate();
  CheckOperator(z, row_stochastic, OperatorKind::kRowStochastic);
  CheckRowIds(z, valid_nodes, "valid");
  const Matrix e = ResidualError(z, train);

  std::vector<NodeId> fixed(train.nodes);
  fixed.insert(fixed.end(), valid_nodes.begin(), valid_nodes.end());
  PropagationResult diffused =
      FixedDiffusion(row_stochastic, e, fixed, config.stop);

  CorrectionResult out;
  out.iterations = diffused.iterations;
  out.converged = diffused.converged;
  out.propagated = std::move(diffused.values);
  out.corrected = z - config.scale * out.propagated;
  return out;
}

const char* ToString(LabelSource source) {
  return source == LabelSource::kTrainOnly ? "train" : "train+val";
}

LabelSource ParseLabelSource(const std::string& text) {
  if (text == "train" || text == "train_only") return LabelSource::kTrainOnly;
  if (text == "train+val" || text == "train_plus_val") {
    return LabelSource::kTrainPlusValid;
  }
  throw ValidationError("unknown label source '" + text + "'");
}

void SmoothConfig::Validate() const {
  if (!(alpha_smooth >= 0.0 && alpha_smooth < 1.0)) {
    throw ValidationError("alpha_smooth must lie in [0, 1)");
  }
  stop.Validate();
}

Matrix MakeGuess(const Matrix& corrected, const LabeledNodes& train,
                 const LabeledNodes& valid, LabelSource source) {
  CheckLabeled(corrected, train, "train");
  Matrix g = corrected;
  auto pin = [&g](const LabeledNodes& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      g.row(rows.nodes[r]).setZero();
      g(rows.nodes[r], rows.labels[r]) = 1.0;
    }
  };
  pin(train);
  if (source == LabelSource::kTrainPlusValid) {
    CheckLabeled(corrected, valid, "valid");
    pin(valid);
  }
  return g;
}

SmoothResult Smooth(const Matrix& guess, const GraphOperator& sym,
                    const SmoothConfig& config) {
  config.Validate();
  CheckOperator(guess, sym, OperatorKind::kSymNorm);
  SpreadParams params;
  params.alpha = config.alpha_smooth;
  params.stop = config.stop;
  PropagationResult spread = LabelSpread(sym, guess, params);
  SmoothResult out;
  out.iterations = spread.iterations;
  out.converged = spread.converged;
  out.scores = std::move(spread.values);
  out.labels = ArgmaxRows(out.scores);
  return out;
}

const char* ToString(PipelineMode mode) {
  switch (mode) {
    case PipelineMode::kFull:
      return "full";
    case PipelineMode::kCorrectOnly:
      return "correct-only";
    case PipelineMode::kBasic:
      return "basic";
    case PipelineMode::kLpOnly:
      return "lp-only";
    case PipelineMode::kBaseOnly:
      return "base-only";
  }
  return "?";
}

PipelineMode ParsePipelineMode(const std::string& text) {
  std::string t = text;
  for (char& ch : t) {
    if (ch == '_') ch = '-';
  }
  if (t == "full") return PipelineMode::kFull;
  if (t == "correct-only") return PipelineMode::kCorrectOnly;
  if (t == "basic") return PipelineMode::kBasic;
  if (t == "lp-only" || t == "lp") return PipelineMode::kLpOnly;
  if (t == "base-only" || t == "base") return PipelineMode::kBaseOnly;
  throw ValidationError("unknown pipeline mode '" + text + "'");
}

PostProcessResult RunPostProcessing(const Matrix& z, const LabeledNodes& train,
                                    const LabeledNodes& valid,
                                    const GraphOperator& sym,
                                    const GraphOperator& row_stochastic,
                                    const CorrectionConfig& correction,
                                    const SmoothConfig& smooth,
                                    PipelineMode mode) {
  using Clock = std::chrono::steady_clock;
  auto seconds_since = [](Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  };
  PostProcessResult out;
  const bool lp = mode == PipelineMode::kLpOnly;
  out.corrected = lp ? Matrix(Matrix::Zero(z.rows(), z.cols())) : z;
  if (!lp) out.base_labels = ArgmaxRows(z);

  const bool correct = (mode == PipelineMode::kFull ||
                        mode == PipelineMode::kCorrectOnly) &&
                       correction.variant != CorrectionVariant::kNone;
  if (correct) {
    const auto t0 = Clock::now();
    CorrectionResult c =
        correction.variant == CorrectionVariant::kAutoscale
            ? CorrectAutoscale(z, train, sym, correction)
            : CorrectFDiff(z, train, valid.nodes, row_stochastic, correction);
    out.correct_seconds = seconds_since(t0);
    out.corrected = std::move(c.corrected);
    out.sigma = c.sigma;
    out.correct_iterations = c.iterations;
    out.correct_converged = c.converged;
  }
  if (!lp) out.corrected_labels = ArgmaxRows(out.corrected);

  if (mode == PipelineMode::kBaseOnly || mode == PipelineMode::kCorrectOnly) {
    out.scores = out.corrected;
    out.final_labels = out.corrected_labels;
    return out;
  }

  const auto t0 = Clock::now();
  const Matrix guess =
      mode == PipelineMode::kBasic
          ? out.corrected
          : MakeGuess(out.corrected, train, valid, smooth.label_source);
  SmoothResult s = Smooth(guess, sym, smooth);
  out.smooth_seconds = seconds_since(t0);
  out.scores = std::move(s.scores);
  out.final_labels = std::move(s.labels);
  out.smooth_iterations = s.iterations;
  out.smooth_converged = s.converged;
  return out;
}

}  // namespace csg
