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

#include "csg/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>

#include "csg/errors.h"
#include "csg/matrix_io.h"
#include "csg/random.h"

namespace csg {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool ParseInt(std::string_view s, long long& out) {
  s = Trim(s);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string Where(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line);
}

}  // namespace

std::vector<NodeId> Dataset::LabeledNodeIds() const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != kUnknownLabel) out.push_back(static_cast<NodeId>(i));
  }
  return out;
}

void Split::Validate(NodeId num_nodes) const {
  std::vector<char> seen(static_cast<std::size_t>(std::max(num_nodes, 0)), 0);
  auto check = [&](const std::vector<NodeId>& part, const char* name) {
    if (part.empty()) {
      throw ValidationError(std::string("split section [") + name +
                            "] is empty");
    }
    for (NodeId u : part) {
      if (u < 0 || u >= num_nodes) {
        throw ValidationError(std::string("split section [") + name +
                              "] index " + std::to_string(u) +
                              " outside [0, " + std::to_string(num_nodes) +
                              ")");
      }
      if (seen[u]) {
        throw ValidationError("split index " + std::to_string(u) +
                              " appears more than once");
      }
      seen[u] = 1;
    }
  };
  check(train, "train");
  check(valid, "valid");
  check(test, "test");
}

std::vector<int> ParseLabels(std::istream& in, const std::string& source_name) {
  std::vector<int> labels;
  std::vector<char> assigned;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto comma = view.find(',');
    if (comma == std::string_view::npos) {
      throw ValidationError(Where(source_name, line_no) +
                            ": expected 'node,label'");
    }
    long long node = 0;
    long long label = 0;
    const bool ok = ParseInt(view.substr(0, comma), node) &&
                    ParseInt(view.substr(comma + 1), label);
    if (!ok) {
      if (!header_seen && labels.empty()) {
        header_seen = true;
        continue;
      }
      throw ValidationError(Where(source_name, line_no) +
                            ": malformed label row '" + std::string(view) +
                            "'");
    }
    if (node < 0 || node > std::numeric_limits<NodeId>::max() - 1) {
      throw ValidationError(Where(source_name, line_no) + ": bad node id " +
                            std::to_string(node));
    }
    if (label < kUnknownLabel || label > std::numeric_limits<int>::max()) {
      throw ValidationError(Where(source_name, line_no) +
                            ": unknown class id " + std::to_string(label));
    }
    if (static_cast<std::size_t>(node) >= labels.size()) {
      labels.resize(static_cast<std::size_t>(node) + 1, kUnknownLabel);
      assigned.resize(labels.size(), 0);
    }
    if (assigned[node]) {
      throw ValidationError(Where(source_name, line_no) + ": node " +
                            std::to_string(node) + " labeled twice");
    }
    assigned[node] = 1;
    labels[node] = static_cast<int>(label);
  }
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i]) {
      throw ValidationError(source_name + ": node " + std::to_string(i) +
                            " has no label row (use -1 for unknown)");
    }
  }
  return labels;
}

Dataset LoadDataset(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw ValidationError("dataset directory " + dir.string() +
                          " does not exist");
  }
  Dataset ds;
  ds.name = dir.filename().string();
  if (ds.name.empty()) ds.name = dir.parent_path().filename().string();

  const fs::path labels_path = dir / "labels.csv";
  std::ifstream labels_in(labels_path);
  if (!labels_in) {
    throw ValidationError("missing label file " + labels_path.string());
  }
  ds.labels = ParseLabels(labels_in, labels_path.string());
  if (ds.labels.empty()) {
    throw ValidationError(labels_path.string() + " lists no nodes");
  }
  const NodeId n = static_cast<NodeId>(ds.labels.size());
  int max_label = -1;
  for (int y : ds.labels) max_label = std::max(max_label, y);
  ds.num_classes = max_label + 1;
  if (ds.num_classes < 2) {
    throw ValidationError(labels_path.string() +
                          ": need at least two classes");
  }

  const fs::path edges_path = dir / "edges.txt";
  if (!fs::exists(edges_path)) {
    throw ValidationError("missing edge file " + edges_path.string());
  }
  std::vector<Edge> edges = ReadEdgeListFile(edges_path);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ValidationError(edges_path.string() + ": node id " +
                            std::to_string(std::max(e.u, e.v)) +
                            " exceeds the " + std::to_string(n) +
                            " nodes listed in labels.csv");
    }
  }
  ds.graph = std::make_shared<const SparseGraph>(BuildGraph(edges, n));

  for (const char* name : {"features.bin", "features.csv"}) {
    const fs::path p = dir / name;
    if (!fs::exists(p)) continue;
    Matrix x = ReadMatrix(p);
    if (x.rows() != n) {
      throw ValidationError(p.string() + " has " + std::to_string(x.rows()) +
                            " rows but the dataset has " + std::to_string(n) +
                            " nodes");
    }
    if (x.cols() == 0) throw ValidationError(p.string() + " has no columns");
    ds.features = std::move(x);
    break;
  }
  return ds;
}

void SaveDataset(const std::filesystem::path& dir, const Dataset& dataset) {
  std::filesystem::create_directories(dir);
  WriteEdgeListFile(dir / "edges.txt", *dataset.graph);
  std::ofstream out(dir / "labels.csv");
  if (!out) throw ValidationError("cannot write " + (dir / "labels.csv").string());
  out << "node,label\n";
  for (std::size_t i = 0; i < dataset.labels.size(); ++i) {
    out << i << ',' << dataset.labels[i] << '\n';
  }
  if (dataset.features) WriteMatrix(dir / "features.csv", *dataset.features);
}

void SplitFractions::Validate() const {
  if (!(train > 0.0 && valid > 0.0 && test > 0.0)) {
    throw ValidationError("split fractions must be positive");
  }
  if (std::abs(train + valid + test - 1.0) > 1e-9) {
    throw ValidationError("split fractions must sum to 1");
  }
}

Split MakeSplit(std::span<const NodeId> eligible,
                const SplitFractions& fractions, std::uint64_t seed) {
  fractions.Validate();
  std::vector<NodeId> order(eligible.begin(), eligible.end());
  const double m = static_cast<double>(order.size());
  const auto n_train = static_cast<std::size_t>(std::llround(fractions.train * m));
  const auto n_valid = static_cast<std::size_t>(std::llround(fractions.valid * m));
  if (n_train == 0 || n_valid == 0 || n_train + n_valid >= order.size()) {
    throw ValidationError("split of " + std::to_string(order.size()) +
                          " nodes leaves an empty part");
  }
  Rng rng(seed);
  rng.Shuffle(std::span<NodeId>(order));
  Split split;
  split.seed = seed;
  split.train.assign(order.begin(), order.begin() + n_train);
  split.valid.assign(order.begin() + n_train, order.begin() + n_train + n_valid);
  split.test.assign(order.begin() + n_train + n_valid, order.end());
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.valid.begin(), split.valid.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

Split MakeSplit(const Dataset& dataset, const SplitFractions& fractions,
                std::uint64_t seed) {
  const std::vector<NodeId> eligible = dataset.LabeledNodeIds();
  return MakeSplit(eligible, fractions, seed);
}

Split ParseSplit(std::istream& in, const std::string& source_name) {
  Split split;
  std::vector<NodeId>* current = nullptr;
  bool has[3] = {false, false, false};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    if (view.front() == '[') {
      if (view == "[train]") {
        current = &split.train;
        has[0] = true;
      } else if (view == "[valid]") {
        current = &split.valid;
        has[1] = true;
      } else if (view == "[test]") {
        current = &split.test;
        has[2] = true;
      } else {
        throw ValidationError(Where(source_name, line_no) +
                              ": unknown section " + std::string(view));
      }
      continue;
    }
    if (!current) {
      throw ValidationError(Where(source_name, line_no) +
                            ": index before any section header");
    }
    std::istringstream tokens{std::string(view)};
    std::string token;
    while (tokens >> token) {
      long long id = 0;
      if (!ParseInt(token, id) || id < 0 ||
          id > std::numeric_limits<NodeId>::max()) {
        throw ValidationError(Where(source_name, line_no) +
                              ": bad node index '" + token + "'");
      }
      current->push_back(static_cast<NodeId>(id));
    }
  }
  const char* names[3] = {"train", "valid", "test"};
  for (int s = 0; s < 3; ++s) {
    if (!has[s]) {
      throw ValidationError(source_name + ": missing [" + names[s] +
                            "] section");
    }
  }
  return split;
}

Split LoadSplit(const std::filesystem::path& path, NodeId num_nodes) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open split file " + path.string());
  Split split = ParseSplit(in, path.string());
  split.Validate(num_nodes);
  return split;
}

void WriteSplit(std::ostream& out, const Split& split) {
  out << "# seed " << split.seed << '\n';
  auto section = [&out](const char* name, const std::vector<NodeId>& ids) {
    out << '[' << name << "]\n";
    for (std::size_t i = 0; i < ids.size(); ++i) {
      out << ids[i] << ((i + 1) % 20 == 0 || i + 1 == ids.size() ? '\n' : ' ');
    }
  };
  section("train", split.train);
  section("valid", split.valid);
  section("test", split.test);
}

void WriteSplit(const std::filesystem::path& path, const Split& split) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write split file " + path.string());
  WriteSplit(out, split);
}

}  // namespace csg
