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

#include <sstream>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "csg/errors.h"
#include "csg/parallel.h"
#include "synthetic.h"

namespace csg {
namespace {

using testing::RandomGraph;
using testing::RandomMatrix;
using testing::RandomSmallGraph;

// Dense adjacency straight from the edge list, independent of the CSR code.
Matrix DenseAdjacency(const std::vector<Edge>& edges, NodeId n) {
  Matrix a = Matrix::Zero(n, n);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

TEST(SparseGraph, CanonicalizesEdges) {
  const std::vector<Edge> edges = {{0, 1}, {1, 0}, {2, 2}, {1, 2}, {0, 1}};
  const SparseGraph g = SparseGraph::FromEdges(edges, 4);
  EXPECT_EQ(g.num_nodes(), 4);
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.Degree(0), 1.0);
  EXPECT_EQ(g.Degree(1), 2.0);
  EXPECT_EQ(g.Degree(2), 1.0);
  EXPECT_EQ(g.Degree(3), 0.0);
  EXPECT_EQ(g.Edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(g.CountConnectedComponents(), 2);
}

TEST(SparseGraph, RowsSortedAndSymmetric) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = RandomSmallGraph(5, 40, seed);
    for (NodeId u = 0; u < g->num_nodes(); ++u) {
      auto row = g->Neighbors(u);
      EXPECT_TRUE(std::is_sorted(row.begin(), row.end()));
      EXPECT_EQ(std::adjacent_find(row.begin(), row.end()), row.end());
      EXPECT_EQ(static_cast<double>(row.size()), g->Degree(u));
      for (NodeId v : row) {
        EXPECT_NE(u, v);
        auto back = g->Neighbors(v);
        EXPECT_TRUE(std::binary_search(back.begin(), back.end(), u));
      }
    }
  }
}

TEST(SparseGraph, RejectsOutOfRangeIdsByName) {
  const std::vector<Edge> edges = {{0, 7}};
  try {
    SparseGraph::FromEdges(edges, 3);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find('7'), std::string::npos);
  }
}

TEST(SparseGraph, FingerprintTracksContent) {
  auto a = RandomGraph(30, 0.2, 1);
  auto b = RandomGraph(30, 0.2, 1);
  auto c = RandomGraph(30, 0.2, 2);
  EXPECT_EQ(a->Fingerprint(), b->Fingerprint());
  EXPECT_NE(a->Fingerprint(), c->Fingerprint());
}

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  std::istringstream in("# header\n0 1\n\n  1 2  \n# trailing\n");
  const auto edges = ParseEdgeList(in);
  EXPECT_EQ(edges, (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(EdgeList, ReportsLineNumberOfMalformedLine) {
  std::istringstream in("0 1\n1 x\n");
  try {
    ParseEdgeList(in, "edges.txt");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("edges.txt:2"), std::string::npos);
  }
}

TEST(EdgeList, FileRoundTrip) {
  auto g = RandomGraph(25, 0.2, 3);
  const auto path = std::filesystem::temp_directory_path() / "csg_edges_rt.txt";
  WriteEdgeListFile(path, *g);
  const auto edges = ReadEdgeListFile(path);
  const SparseGraph back = SparseGraph::FromEdges(edges, g->num_nodes());
  EXPECT_EQ(back.Fingerprint(), g->Fingerprint());
  std::filesystem::remove(path);
}

TEST(GraphOperator, SymNormMatchesDenseConstruction) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = RandomSmallGraph(3, 40, seed);
    const NodeId n = g->num_nodes();
    const Matrix a = DenseAdjacency(g->Edges(), n);
    Matrix expected = Matrix::Zero(n, n);
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = 0; j < n; ++j) {
        const double di = a.row(i).sum();
        const double dj = a.row(j).sum();
        if (a(i, j) != 0.0) expected(i, j) = 1.0 / std::sqrt(di * dj);
      }
    }
    const GraphOperator s(g, OperatorKind::kSymNorm);
    EXPECT_LE((s.ToDense() - expected).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE((s.ToDense() - s.ToDense().transpose()).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(GraphOperator, SymNormSpectralNormAtMostOne) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = RandomSmallGraph(3, 40, seed);
    const Matrix s = GraphOperator(g, OperatorKind::kSymNorm).ToDense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
    EXPECT_LE(eig.eigenvalues().cwiseAbs().maxCoeff(), 1.0 + 1e-12);
  }
}

TEST(GraphOperator, RowStochasticRowsSumToOne) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = RandomSmallGraph(3, 40, seed);
    const Matrix p = GraphOperator(g, OperatorKind::kRowStochastic).ToDense();
    for (NodeId i = 0; i < g->num_nodes(); ++i) {
      const double expected = g->Degree(i) > 0 ? 1.0 : 0.0;
      EXPECT_NEAR(p.row(i).sum(), expected, 1e-14);
      EXPECT_GE(p.row(i).minCoeff(), 0.0);
    }
  }
}

TEST(GraphOperator, ApplyMatchesDenseMultiply) {
  for (auto kind : {OperatorKind::kSymNorm, OperatorKind::kRowStochastic}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto g = RandomSmallGraph(3, 50, seed);
      const GraphOperator op(g, kind);
      const Matrix x = RandomMatrix(g->num_nodes(), 4, seed + 100);
      const Matrix dense = DenseAdjacency(g->Edges(), g->num_nodes());
      // Rebuild the operator densely from degrees.
      Matrix expected_op = dense;
      for (NodeId i = 0; i < g->num_nodes(); ++i) {
        for (NodeId j = 0; j < g->num_nodes(); ++j) {
          if (dense(i, j) == 0.0) continue;
          const double di = dense.row(i).sum();
          const double dj = dense.row(j).sum();
          expected_op(i, j) = kind == OperatorKind::kSymNorm
                                  ? 1.0 / std::sqrt(di * dj)
                                  : 1.0 / di;
        }
      }
      EXPECT_LE((op.Apply(x) - expected_op * x).cwiseAbs().maxCoeff(), 1e-13);
      EXPECT_LE((Spmm(op, x) - op.Apply(x)).cwiseAbs().maxCoeff(), 0.0);
    }
  }
}

TEST(GraphOperator, EntryMatchesDense) {
  auto g = RandomGraph(20, 0.3, 5);
  const GraphOperator op(g, OperatorKind::kSymNorm);
  const Matrix d = op.ToDense();
  for (NodeId i = 0; i < 20; ++i) {
    for (NodeId j = 0; j < 20; ++j) EXPECT_EQ(op.Entry(i, j), d(i, j));
  }
}

TEST(GraphOperator, ResultIndependentOfThreadCount) {
  auto g = RandomGraph(300, 0.05, 9);
  const GraphOperator op(g, OperatorKind::kSymNorm);
  const Matrix x = RandomMatrix(300, 7, 10);
  const int saved = NumThreads();
  SetNumThreads(1);
  const Matrix one = op.Apply(x);
  SetNumThreads(4);
  const Matrix four = op.Apply(x);
  SetNumThreads(saved);
  EXPECT_TRUE(one == four);
}

TEST(GraphOperator, RejectsRowMismatch) {
  auto g = RandomGraph(10, 0.3, 1);
  const GraphOperator op(g, OperatorKind::kSymNorm);
  EXPECT_THROW(op.Apply(Matrix::Zero(9, 2)), ValidationError);
}

}  // namespace
}  // namespace csg
