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

#include "csg/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <string>
#include <string_view>

#include "csg/errors.h"
#include "csg/parallel.h"

namespace csg {
namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void FnvMix(std::uint64_t& h, std::uint64_t value) {
  for (int b = 0; b < 8; ++b) {
    h ^= (value >> (8 * b)) & 0xffu;
    h *= kFnvPrime;
  }
}

bool IsBlankOrComment(std::string_view line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (ch != ' ' && ch != '\t' && ch != '\r') return false;
  }
  return true;
}

std::string_view NextToken(std::string_view& rest) {
  std::size_t b = rest.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    rest = {};
    return {};
  }
  rest.remove_prefix(b);
  std::size_t e = rest.find_first_of(" \t\r");
  std::string_view tok = rest.substr(0, e);
  rest.remove_prefix(e == std::string_view::npos ? rest.size() : e);
  return tok;
}

bool ParseId(std::string_view tok, std::int64_t& value) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

SparseGraph SparseGraph::FromEdges(std::span<const Edge> edges,
                                   NodeId num_nodes) {
  if (num_nodes < 0) throw ValidationError("negative node count");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (NodeId id : {edges[e].u, edges[e].v}) {
      if (id < 0 || id >= num_nodes) {
        throw ValidationError("edge " + std::to_string(e) + " references node " +
                              std::to_string(id) + " outside [0, " +
                              std::to_string(num_nodes) + ")");
      }
    }
  }

  // Counting sort into rows, then sort + dedupe each row.
  std::vector<std::int64_t> counts(static_cast<std::size_t>(num_nodes) + 1, 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    ++counts[e.u + 1];
    ++counts[e.v + 1];
  }
  std::partial_sum(counts.begin(), counts.end(), counts.begin());
  std::vector<NodeId> scratch(counts.back());
  std::vector<std::int64_t> cursor(counts.begin(), counts.end() - 1);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    scratch[cursor[e.u]++] = e.v;
    scratch[cursor[e.v]++] = e.u;
  }

  SparseGraph g;
  g.num_nodes_ = num_nodes;
  g.row_offsets_.assign(static_cast<std::size_t>(num_nodes) + 1, 0);
  g.col_indices_.reserve(scratch.size());
  g.degrees_.assign(num_nodes, 0.0);
  for (NodeId u = 0; u < num_nodes; ++u) {
    auto first = scratch.begin() + counts[u];
    auto last = scratch.begin() + counts[u + 1];
    std::sort(first, last);
    last = std::unique(first, last);
    g.col_indices_.insert(g.col_indices_.end(), first, last);
    g.row_offsets_[u + 1] = static_cast<std::int64_t>(g.col_indices_.size());
    g.degrees_[u] = static_cast<double>(last - first);
  }
  g.col_indices_.shrink_to_fit();
  return g;
}

double SparseGraph::AverageDegree() const {
  if (num_nodes_ == 0) return 0.0;
  return static_cast<double>(col_indices_.size()) / num_nodes_;
}

std::vector<Edge> SparseGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes_; ++u) {
    for (NodeId v : Neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int SparseGraph::CountConnectedComponents() const {
  std::vector<char> seen(num_nodes_, 0);
  std::vector<NodeId> stack;
  int components = 0;
  for (NodeId s = 0; s < num_nodes_; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : Neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return components;
}

std::uint64_t SparseGraph::Fingerprint() const {
  std::uint64_t h = kFnvOffset;
  FnvMix(h, static_cast<std::uint64_t>(num_nodes_));
  for (std::int64_t off : row_offsets_) FnvMix(h, static_cast<std::uint64_t>(off));
  for (NodeId v : col_indices_) FnvMix(h, static_cast<std::uint64_t>(v));
  return h;
}

SparseGraph BuildGraph(std::span<const Edge> edges, NodeId num_nodes) {
  return SparseGraph::FromEdges(edges, num_nodes);
}

std::vector<Edge> ParseEdgeList(std::istream& in,
                                const std::string& source_name) {
  std::vector<Edge> edges;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    std::string_view rest(line);
    std::string_view a = NextToken(rest);
    std::string_view b = NextToken(rest);
    std::string_view extra = NextToken(rest);
    std::int64_t u = 0;
    std::int64_t v = 0;
    if (!ParseId(a, u) || !ParseId(b, v) || !extra.empty() || u < 0 || v < 0 ||
        u > INT32_MAX || v > INT32_MAX) {
      throw ValidationError(source_name + ":" + std::to_string(line_no) +
                            ": expected two non-negative node ids, got '" +
                            line + "'");
    }
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  return edges;
}

std::vector<Edge> ReadEdgeListFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open edge list " + path.string());
  return ParseEdgeList(in, path.string());
}

void WriteEdgeListFile(const std::filesystem::path& path,
                       const SparseGraph& graph) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << "# nodes " << graph.num_nodes() << " edges " << graph.num_edges()
      << "\n";
  for (const Edge& e : graph.Edges()) out << e.u << ' ' << e.v << '\n';
}

const char* ToString(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kSymNorm:
      return "sym-norm";
    case OperatorKind::kRowStochastic:
      return "row-stochastic";
  }
  return "unknown";
}

GraphOperator::GraphOperator(std::shared_ptr<const SparseGraph> graph,
                             OperatorKind kind)
    : graph_(std::move(graph)), kind_(kind) {
  if (!graph_) throw ValidationError("operator requires a graph");
  const NodeId n = graph_->num_nodes();
  row_scale_.assign(n, 0.0);
  col_scale_.assign(n, 0.0);
  auto degrees = graph_->degrees();
  for (NodeId i = 0; i < n; ++i) {
    const double d = degrees[i];
    if (d <= 0.0) continue;
    if (kind_ == OperatorKind::kSymNorm) {
      row_scale_[i] = 1.0 / std::sqrt(d);
      col_scale_[i] = row_scale_[i];
    } else {
      row_scale_[i] = 1.0 / d;
      col_scale_[i] = 1.0;
    }
  }
}

double GraphOperator::Entry(NodeId i, NodeId j) const {
  auto nbrs = graph_->Neighbors(i);
  if (!std::binary_search(nbrs.begin(), nbrs.end(), j)) return 0.0;
  return row_scale_[i] * col_scale_[j];
}

void GraphOperator::Apply(const Matrix& in, Matrix& out) const {
  const NodeId n = size();
  if (in.rows() != n) {
    throw ValidationError("operator has " + std::to_string(n) +
                          " rows but matrix has " + std::to_string(in.rows()));
  }
  const Eigen::Index cols = in.cols();
  out.resize(n, cols);
  const auto offsets = graph_->row_offsets();
  const auto indices = graph_->col_indices();
  const double* src = in.data();
  double* dst = out.data();
  const bool unit_cols = kind_ == OperatorKind::kRowStochastic;

#pragma omp parallel for schedule(static) num_threads(NumThreads())
  for (NodeId i = 0; i < n; ++i) {
    double* row = dst + static_cast<std::size_t>(i) * cols;
    std::fill(row, row + cols, 0.0);
    for (std::int64_t e = offsets[i]; e < offsets[i + 1]; ++e) {
      const NodeId j = indices[e];
      const double* other = src + static_cast<std::size_t>(j) * cols;
      const double w = unit_cols ? 1.0 : col_scale_[j];
      for (Eigen::Index c = 0; c < cols; ++c) row[c] += w * other[c];
    }
    const double r = row_scale_[i];
    for (Eigen::Index c = 0; c < cols; ++c) row[c] *= r;
  }
}

Matrix GraphOperator::Apply(const Matrix& in) const {
  Matrix out;
  Apply(in, out);
  return out;
}

void GraphOperator::Apply(std::span<const double> in,
                          std::span<double> out) const {
  const NodeId n = size();
  if (static_cast<NodeId>(in.size()) != n ||
      static_cast<NodeId>(out.size()) != n) {
    throw ValidationError("vector length does not match operator size");
  }
  const auto offsets = graph_->row_offsets();
  const auto indices = graph_->col_indices();
#pragma omp parallel for schedule(static) num_threads(NumThreads())
  for (NodeId i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::int64_t e = offsets[i]; e < offsets[i + 1]; ++e) {
      acc += col_scale_[indices[e]] * in[indices[e]];
    }
    out[i] = row_scale_[i] * acc;
  }
}

Matrix GraphOperator::ToDense() const {
  const NodeId n = size();
  Matrix dense = Matrix::Zero(n, n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j : graph_->Neighbors(i)) {
      dense(i, j) = row_scale_[i] * col_scale_[j];
    }
  }
  return dense;
}

GraphOperator MakeOperator(std::shared_ptr<const SparseGraph> graph,
                           OperatorKind kind) {
  return GraphOperator(std::move(graph), kind);
}

Matrix Spmm(const GraphOperator& op, const Matrix& m) { return op.Apply(m); }

}  // namespace csg
