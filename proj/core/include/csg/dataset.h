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

#ifndef CSG_DATASET_H_
#define CSG_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csg/graph.h"
#include "csg/types.h"

namespace csg {

// On-disk layout of a dataset directory:
//
//   edges.txt      edge list (see ParseEdgeList)
//   labels.csv     header "node,label", one row per node 0..n-1; -1 = unknown
//   features.csv   optional dense n x p matrix (or features.bin)
//   split.txt      optional fixed split (see ParseSplit)
//
// The node count is taken from labels.csv.
struct Dataset {
  std::string name;
  std::shared_ptr<const SparseGraph> graph;
  std::optional<Matrix> features;
  std::vector<int> labels;
  int num_classes = 0;

  NodeId num_nodes() const { return graph ? graph->num_nodes() : 0; }
  // Nodes whose label is known, ascending.
  std::vector<NodeId> LabeledNodeIds() const;
};

struct Split {
  std::vector<NodeId> train;
  std::vector<NodeId> valid;
  std::vector<NodeId> test;
  std::uint64_t seed = 0;

  // Disjoint, in range, every part non-empty. Throws ValidationError naming
  // the first offending index.
  void Validate(NodeId num_nodes) const;
};

Dataset LoadDataset(const std::filesystem::path& dir);
void SaveDataset(const std::filesystem::path& dir, const Dataset& dataset);

std::vector<int> ParseLabels(std::istream& in, const std::string& source_name);

struct SplitFractions {
  double train = 0.6;
  double valid = 0.2;
  double test = 0.2;

  void Validate() const;
};

// Uniform random partition of the labeled nodes. The train and valid sizes
// are round(fraction * m); the test part takes the remainder. Each part is
// returned sorted.
Split MakeSplit(const Dataset& dataset, const SplitFractions& fractions,
                std::uint64_t seed);
Split MakeSplit(std::span<const NodeId> eligible,
                const SplitFractions& fractions, std::uint64_t seed);

// Split text: "[train]", "[valid]" and "[test]" section headers, each
// followed by whitespace-separated node ids. '#' starts a comment line.
Split ParseSplit(std::istream& in, const std::string& source_name);
Split LoadSplit(const std::filesystem::path& path, NodeId num_nodes);
void WriteSplit(std::ostream& out, const Split& split);
void WriteSplit(const std::filesystem::path& path, const Split& split);

}  // namespace csg

#endif  // CSG_DATASET_H_
