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

#ifndef CSG_BENCH_H_
#define CSG_BENCH_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "csg/correct_smooth.h"
#include "csg/dataset.h"
#include "csg/pipeline.h"
#include "csg/presets.h"

namespace csg {

// Base predictors compared by the benchmark: label propagation alone, a linear
// model on raw features, and linear / MLP models on raw plus spectral
// features (spectral only when a dataset has no raw features).
enum class BenchBase { kLabelPropagation, kPlainLinear, kLinear, kMlp };

const char* ToString(BenchBase base);
BenchBase ParseBenchBase(const std::string& text);

struct BenchOptions {
  std::filesystem::path data_dir;
  std::vector<std::string> datasets;
  int seeds = 5;
  std::uint64_t first_seed = 0;
  std::vector<BenchBase> bases = {BenchBase::kLabelPropagation,
                                  BenchBase::kPlainLinear, BenchBase::kLinear,
                                  BenchBase::kMlp};
  std::vector<CorrectionVariant> variants = {CorrectionVariant::kAutoscale,
                                             CorrectionVariant::kFDiffScale};
  std::vector<LabelSource> sources = {LabelSource::kTrainOnly,
                                      LabelSource::kTrainPlusValid};
  // Also emit base-only and correct-only rows for every trained base model.
  bool stage_rows = true;
  bool tune = true;
  // Post-processing is repeated this many times and the median time kept.
  int timing_repetitions = 3;
  int jobs = 1;
  int epochs = 300;
  int spectral_k = 128;
  std::filesystem::path cache_dir;
};

struct BenchRow {
  std::string dataset;
  BenchBase base = BenchBase::kLabelPropagation;
  FeatureMode features = FeatureMode::kRawOnly;
  CorrectionVariant variant = CorrectionVariant::kNone;
  LabelSource labels = LabelSource::kTrainOnly;
  PipelineMode mode = PipelineMode::kFull;

  std::vector<std::uint64_t> seeds;
  std::vector<double> final_accuracy;  // per seed, test set
  std::vector<double> base_accuracy;
  std::vector<double> valid_accuracy;
  std::vector<double> train_seconds;
  std::vector<double> post_seconds;    // median over repetitions, per seed
  std::vector<double> total_seconds;   // train + post, per seed
  std::int64_t parameters = 0;
  std::uint64_t config_hash = 0;

  double MeanAccuracy() const;
  double StdAccuracy() const;
};

using BenchProgress = std::function<void(const std::string&)>;

// Runs every (dataset, seed) cell, in parallel across `jobs` workers, and
// aggregates one row per (dataset, base, variant, label source, mode).
std::vector<BenchRow> RunBench(const BenchOptions& options,
                               const BenchProgress& progress = {});

// Columns: dataset,base,features,variant,labels,mode,seeds,mean_acc,std_acc,
// mean_base_acc,mean_valid_acc,median_train_s,median_post_s,parameters,
// config_hash,per_seed_acc. Accuracies in percent.
void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows);

// Split for `seed` following the dataset's preset: a fresh random split, or
// the split.txt shipped with the dataset.
Split SplitForSeed(const Dataset& dataset, const std::filesystem::path& dir,
                   const DatasetPreset& preset, std::uint64_t seed);

}  // namespace csg

#endif  // CSG_BENCH_H_
