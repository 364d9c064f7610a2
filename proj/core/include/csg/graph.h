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

#ifndef CSG_GRAPH_H_
#define CSG_GRAPH_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csg/types.h"

namespace csg {

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected, unweighted graph in compressed sparse row form.
//
// Invariants (established by FromEdges and never mutated afterwards):
//   * symmetric: v is in row u iff u is in row v
//   * rows are sorted and free of duplicates
//   * no self-loops
//   * degrees()[i] == row length of i
class SparseGraph {
 public:
  SparseGraph() = default;

  // Canonicalizes an arbitrary edge list: both orientations are added,
  // duplicates merged and self-loops dropped. Throws ValidationError naming
  // the offending id if any endpoint is outside [0, num_nodes).
  static SparseGraph FromEdges(std::span<const Edge> edges, NodeId num_nodes);

  NodeId num_nodes() const { return num_nodes_; }
  // Number of undirected edges (each stored twice in the CSR arrays).
  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(col_indices_.size()) / 2;
  }

  std::span<const std::int64_t> row_offsets() const { return row_offsets_; }
  std::span<const NodeId> col_indices() const { return col_indices_; }
  std::span<const double> degrees() const { return degrees_; }

  std::span<const NodeId> Neighbors(NodeId u) const {
    return std::span<const NodeId>(col_indices_)
        .subspan(row_offsets_[u], row_offsets_[u + 1] - row_offsets_[u]);
  }
  double Degree(NodeId u) const { return degrees_[u]; }
  double AverageDegree() const;

  // Canonical edge list, one entry per undirected edge with u < v, sorted.
  std::vector<Edge> Edges() const;

  int CountConnectedComponents() const;

  // Stable 64-bit content hash (FNV-1a over the CSR arrays), used to key
  // on-disk caches.
  std::uint64_t Fingerprint() const;

 private:
  NodeId num_nodes_ = 0;
  std::vector<std::int64_t> row_offsets_{0};
  std::vector<NodeId> col_indices_;
  std::vector<double> degrees_;
};

SparseGraph BuildGraph(std::span<const Edge> edges, NodeId num_nodes);

// Edge-list text: one edge per line as two whitespace-separated decimal ids.
// Blank lines and lines starting with '#' are skipped. Throws
// ValidationError with the line number on malformed input.
std::vector<Edge> ParseEdgeList(std::istream& in,
                                const std::string& source_name = "<stream>");
std::vector<Edge> ReadEdgeListFile(const std::filesystem::path& path);
void WriteEdgeListFile(const std::filesystem::path& path,
                       const SparseGraph& graph);

enum class OperatorKind {
  kSymNorm,        // S = D^{-1/2} A D^{-1/2}
  kRowStochastic,  // P = D^{-1} A
};

const char* ToString(OperatorKind kind);

// A normalized adjacency operator sharing ownership of its graph. Entry (i,j)
// for an edge is row_scale[i] * col_scale[j]; isolated nodes get zero
// rows and columns. Immutable and safe to share across threads.
class GraphOperator {
 public:
  GraphOperator(std::shared_ptr<const SparseGraph> graph, OperatorKind kind);

  OperatorKind kind() const { return kind_; }
  const SparseGraph& graph() const { return *graph_; }
  const std::shared_ptr<const SparseGraph>& shared_graph() const {
    return graph_;
  }
  NodeId size() const { return graph_->num_nodes(); }

  // Value of the (i, j) entry; zero when (i, j) is not an edge.
  double Entry(NodeId i, NodeId j) const;

  // out = op * in. `out` is resized; it must not alias `in`. Each output row
  // is accumulated over neighbors in index order, so results are identical
  // for any thread count.
  void Apply(const Matrix& in, Matrix& out) const;
  Matrix Apply(const Matrix& in) const;
  void Apply(std::span<const double> in, std::span<double> out) const;

  // Dense materialization, intended for small graphs and oracles.
  Matrix ToDense() const;

 private:
  std::shared_ptr<const SparseGraph> graph_;
  OperatorKind kind_;
  std::vector<double> row_scale_;
  std::vector<double> col_scale_;
};

GraphOperator MakeOperator(std::shared_ptr<const SparseGraph> graph,
                           OperatorKind kind);

// Sparse-times-dense product. Throws ValidationError on a row mismatch.
Matrix Spmm(const GraphOperator& op, const Matrix& m);

}  // namespace csg

#endif  // CSG_GRAPH_H_
