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

#ifndef CSG_PIPELINE_H_
#define CSG_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "csg/base_predictor.h"
#include "csg/correct_smooth.h"
#include "csg/dataset.h"
#include "csg/grid_search.h"
#include "csg/spectral.h"

namespace csg {

std::string VersionString();
// CPU model and thread counts, for run reports.
std::string HardwareString();

struct PipelineConfig {
  PipelineMode mode = PipelineMode::kFull;
  FeatureMode features = FeatureMode::kRawOnly;
  TrainConfig train;
  CorrectionConfig correction;
  SmoothConfig smooth;
  // Grid-search alpha/s on validation; otherwise use the configs as given.
  bool tune = true;
  SearchSpace space = SearchSpace::Default();

  // Spectral embedding (used unless features == kRawOnly).
  int spectral_k = 128;
  std::optional<double> tau;
  std::uint64_t spectral_seed = 0;
  std::filesystem::path cache_dir;

  std::string ToJson() const;
  // FNV-1a of ToJson(); identical configs hash identically.
  std::uint64_t Hash() const;
};

struct StageTimings {
  double spectral = 0.0;
  double train = 0.0;
  double correct = 0.0;
  double smooth = 0.0;
  double total = 0.0;
};

struct PipelineReport {
  std::string dataset;
  PipelineConfig config;  // with tuned values filled in
  std::uint64_t config_hash = 0;
  std::uint64_t split_seed = 0;
  NodeId num_nodes = 0;
  std::int64_t num_edges = 0;
  int num_classes = 0;
  int num_components = 0;
  std::size_t train_size = 0;
  std::size_t valid_size = 0;
  std::size_t test_size = 0;

  // Test accuracies per stage; NaN when the stage did not run.
  double base_accuracy = 0.0;
  double corrected_accuracy = 0.0;
  double final_accuracy = 0.0;
  double valid_accuracy = 0.0;  // of the final predictions
  std::optional<GridPoint> tuned;

  std::int64_t parameter_count = 0;
  int best_epoch = -1;
  double sigma = 0.0;
  int correct_iterations = 0;
  int smooth_iterations = 0;
  bool correct_converged = true;
  bool smooth_converged = true;
  StageTimings timings;
  std::string hardware;
  std::string version;

  // Per-node predictions; -1 where a stage did not run.
  std::vector<int> true_labels;
  std::vector<int> base_pred;
  std::vector<int> corrected_pred;
  std::vector<int> final_pred;

  std::string ToJson() const;
  // Columns: node,true_label,base_pred,corrected_pred,final_pred
  void WritePerNodeCsv(std::ostream& out) const;
};

// Builds the base-model input matrix for `mode`, computing (or loading) the
// spectral embedding when needed. Throws ValidationError when raw features
// are requested but the dataset has none.
Matrix BuildFeatures(const Dataset& dataset, const PipelineConfig& config,
                     double* spectral_seconds = nullptr);

// Trains the base model on `features` and runs post-processing.
PipelineReport RunPipeline(const Dataset& dataset, const Split& split,
                           const Matrix& features,
                           const PipelineConfig& config);
PipelineReport RunPipeline(const Dataset& dataset, const Split& split,
                           const PipelineConfig& config);

// Post-processing only, from existing base predictions Z (n x c).
PipelineReport RunFromPredictions(const Dataset& dataset, const Split& split,
                                  const Matrix& z,
                                  const PipelineConfig& config);

}  // namespace csg

#endif  // CSG_PIPELINE_H_
