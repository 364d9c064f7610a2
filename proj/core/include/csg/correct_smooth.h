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

#ifndef CSG_CORRECT_SMOOTH_H_
#define CSG_CORRECT_SMOOTH_H_

#include <span>
#include <string>
#include <vector>

#include "csg/graph.h"
#include "csg/propagation.h"
#include "csg/types.h"

namespace csg {

// One-hot encoding of `labels` at `nodes`, zero elsewhere (n x num_classes).
Matrix OneHotRows(NodeId n, int num_classes, const LabeledNodes& rows);

// E = Z - Y on the training rows, exactly zero on every other row.
Matrix ResidualError(const Matrix& z, const LabeledNodes& train);

enum class CorrectionVariant { kAutoscale, kFDiffScale, kNone };

const char* ToString(CorrectionVariant variant);
CorrectionVariant ParseCorrectionVariant(const std::string& text);

struct CorrectionConfig {
  CorrectionVariant variant = CorrectionVariant::kAutoscale;
  double alpha_correct = 0.9;
  double scale = 1.0;         // s, FDiff-scale only
  double epsilon_row = 1e-9;  // rows with smaller propagated L1 norm are kept
  StopRule stop;

  void Validate() const;
};

struct CorrectionResult {
  Matrix corrected;   // Z_r
  Matrix propagated;  // E hat
  double sigma = 0.0;  // Autoscale only
  int iterations = 0;
  bool converged = true;
};

// E = Z - Y points away from the truth, so the propagated residual Ehat is
// subtracted from Z in both correction variants.

// Spreads E with `sym` (label spreading, alpha_correct). Rows outside the
// training set get Z - sigma * Ehat_i / |Ehat_i|_1, where sigma is the mean
// L1 norm of the training residual rows; training rows get Z - Ehat.
CorrectionResult CorrectAutoscale(const Matrix& z, const LabeledNodes& train,
                                  const GraphOperator& sym,
                                  const CorrectionConfig& config);

// Fixed diffusion of E with every labeled row (train and valid) pinned;
// validation rows are pinned at zero. Z_r = Z - s * Ehat.
CorrectionResult CorrectFDiff(const Matrix& z, const LabeledNodes& train,
                              std::span<const NodeId> valid_nodes,
                              const GraphOperator& row_stochastic,
                              const CorrectionConfig& config);

enum class LabelSource { kTrainOnly, kTrainPlusValid };

const char* ToString(LabelSource source);
LabelSource ParseLabelSource(const std::string& text);

enum class SmoothMode { kStandard, kBasic };

struct SmoothConfig {
  double alpha_smooth = 0.8;
  LabelSource label_source = LabelSource::kTrainOnly;
  SmoothMode mode = SmoothMode::kStandard;
  StopRule stop;

  void Validate() const;
};

// Copy of Z_r with training rows (and validation rows for kTrainPlusValid)
// replaced by one-hot truth. `valid` may be empty for kTrainOnly.
Matrix MakeGuess(const Matrix& corrected, const LabeledNodes& train,
                 const LabeledNodes& valid, LabelSource source);

struct SmoothResult {
  Matrix scores;  // not renormalized
  std::vector<int> labels;
  int iterations = 0;
  bool converged = true;
};

SmoothResult Smooth(const Matrix& guess, const GraphOperator& sym,
                    const SmoothConfig& config);

enum class PipelineMode { kFull, kCorrectOnly, kBasic, kLpOnly, kBaseOnly };

const char* ToString(PipelineMode mode);
// Accepts "full", "correct-only", "basic", "lp-only", "base-only" (or with
// underscores).
PipelineMode ParsePipelineMode(const std::string& text);

struct PostProcessResult {
  Matrix corrected;  // Z_r (equals Z when no correction ran)
  Matrix scores;     // final score matrix
  std::vector<int> base_labels;
  std::vector<int> corrected_labels;
  std::vector<int> final_labels;
  double sigma = 0.0;
  int correct_iterations = 0;
  int smooth_iterations = 0;
  bool correct_converged = true;
  bool smooth_converged = true;
  double correct_seconds = 0.0;
  double smooth_seconds = 0.0;
};

// Runs the post-processing stages selected by `mode` on base predictions Z:
//
//   full          correct, guess, smooth
//   correct-only  correct; predictions are argmax of Z_r
//   basic         smooth Z directly
//   lp-only       smooth one-hot labels (Z only supplies the shape)
//   base-only     argmax of Z
//
// Only train labels, plus valid labels when the smooth config asks for them,
// are read. `valid` rows are pinned at zero error by FDiff-scale.
PostProcessResult RunPostProcessing(const Matrix& z, const LabeledNodes& train,
                                    const LabeledNodes& valid,
                                    const GraphOperator& sym,
                                    const GraphOperator& row_stochastic,
                                    const CorrectionConfig& correction,
                                    const SmoothConfig& smooth,
                                    PipelineMode mode);

}  // namespace csg

#endif  // CSG_CORRECT_SMOOTH_H_
