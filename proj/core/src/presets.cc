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

#include "csg/presets.h"

#include <algorithm>
#include <cctype>

namespace csg {
namespace {

std::vector<DatasetPreset> AllPresets() {
  const SplitFractions citation{0.6, 0.2, 0.2};
  const SplitFractions social{0.4, 0.1, 0.5};
  return {
      {"cora", 3, 64, 0.01, SplitPolicy::kRandom, citation, true},
      {"citeseer", 3, 64, 0.01, SplitPolicy::kRandom, citation, true},
      {"pubmed", 3, 64, 0.01, SplitPolicy::kRandom, citation, true},
      {"email", 3, 64, 0.01, SplitPolicy::kRandom, social, false},
      {"us_county", 5, 256, 0.005, SplitPolicy::kRandom, social, true},
      {"rice31", 5, 256, 0.005, SplitPolicy::kRandom, social, true},
      {"wikics", 3, 256, 0.005, SplitPolicy::kFixed, citation, true},
      {"arxiv", 3, 256, 0.01, SplitPolicy::kFixed, citation, true},
      {"products", 3, 256, 0.01, SplitPolicy::kFixed, citation, true},
  };
}

std::string Canonical(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  std::replace(name.begin(), name.end(), '-', '_');
  if (name == "county" || name == "uscounty") return "us_county";
  if (name == "ogbn_arxiv") return "arxiv";
  if (name == "ogbn_products") return "products";
  if (name == "wiki_cs") return "wikics";
  return name;
}

}  // namespace

std::optional<DatasetPreset> FindPreset(const std::string& name) {
  const std::string key = Canonical(name);
  for (const DatasetPreset& p : AllPresets()) {
    if (p.name == key) return p;
  }
  return std::nullopt;
}

DatasetPreset PresetOrDefault(const std::string& name) {
  if (auto p = FindPreset(name)) return *p;
  DatasetPreset generic;
  generic.name = name;
  return generic;
}

std::vector<std::string> KnownPresetNames() {
  std::vector<std::string> names;
  for (const DatasetPreset& p : AllPresets()) names.push_back(p.name);
  return names;
}

TrainConfig MakeTrainConfig(const DatasetPreset& preset, ModelKind kind,
                            std::uint64_t seed) {
  TrainConfig config;
  config.kind = kind;
  config.layers = preset.mlp_layers;
  config.hidden = preset.mlp_hidden;
  config.lr = preset.lr;
  config.seed = seed;
  return config;
}

}  // namespace csg
