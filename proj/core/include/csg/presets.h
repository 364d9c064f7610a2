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

#ifndef CSG_PRESETS_H_
#define CSG_PRESETS_H_

#include <optional>
#include <string>
#include <vector>

#include "csg/base_predictor.h"
#include "csg/dataset.h"

namespace csg {

enum class SplitPolicy { kRandom, kFixed };

// Per-dataset defaults for the MLP base model and the split protocol.
struct DatasetPreset {
  std::string name;
  int mlp_layers = 3;
  int mlp_hidden = 64;
  double lr = 0.01;
  SplitPolicy split_policy = SplitPolicy::kRandom;
  SplitFractions fractions;
  // Datasets without node features use the spectral embedding only.
  bool has_raw_features = true;
};

// Known names (case-insensitive): cora, citeseer, pubmed, email, us_county
// (or county), rice31, wikics, arxiv, products. Returns nullopt otherwise.
std::optional<DatasetPreset> FindPreset(const std::string& name);

// The preset for `name`, or a generic one (3 x 64 MLP, lr 0.01, 60/20/20).
DatasetPreset PresetOrDefault(const std::string& name);

std::vector<std::string> KnownPresetNames();

// TrainConfig for `kind` using the preset's depth, width and learning rate.
TrainConfig MakeTrainConfig(const DatasetPreset& preset, ModelKind kind,
                            std::uint64_t seed);

}  // namespace csg

#endif  // CSG_PRESETS_H_
