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

#include "csg/propagation.h"

#include <numeric>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "csg/errors.h"
#include "csg/random.h"
#include "oracles.h"
#include "synthetic.h"

namespace csg {
namespace {

using testing::Complete;
using testing::ConnectedSmallGraph;
using testing::Cycle;
using testing::FixedOracle;
using testing::RandomGraph;
using testing::RandomMatrix;
using testing::RandomSmallGraph;
using testing::SpreadOracle;

const StopRule kTight{100000, 1e-13};

TEST(LabelSpread, AlphaZeroReturnsInit) {
  auto g = RandomGraph(20, 0.2, 1);
  const Matrix y = RandomMatrix(20, 3, 2);
  const auto r = LabelSpread(GraphOperator(g, OperatorKind::kSymNorm), y,
                             {0.0, StopRule{}});
  EXPECT_TRUE(r.values == y);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 1);
}

TEST(LabelSpread, RegularGraphKeepsConstantVector) {
  auto g = Cycle(12);
  const Matrix ones = Matrix::Ones(12, 1);
  const auto r =
      LabelSpread(GraphOperator(g, OperatorKind::kSymNorm), ones, {0.9, kTight});
  EXPECT_LE((r.values - ones).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LabelSpread, MatchesClosedFormOnRandomGraphs) {
  Rng rng(42);
  const double alphas[] = {0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto g = RandomSmallGraph(2, 50, seed);
    const double alpha = alphas[rng.Below(7)];
    const Matrix y = RandomMatrix(g->num_nodes(), 3, seed + 7);
    const GraphOperator op(g, OperatorKind::kSymNorm);
    const auto r = LabelSpread(op, y, {alpha, kTight});
    ASSERT_TRUE(r.converged);
    EXPECT_LE((r.values - SpreadOracle(*g, y, alpha)).cwiseAbs().maxCoeff(), 1e-9);
    // The library's dense solver agrees with the independent one.
    EXPECT_LE((DenseSpreadSolve(op, y, alpha) - SpreadOracle(*g, y, alpha))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-10);
  }
}

TEST(LabelSpread, IteratesNeverGrowInNorm) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto g = RandomSmallGraph(2, 50, seed);
    const Matrix y = RandomMatrix(g->num_nodes(), 4, seed);
    const double bound = y.norm();
    int seen = 0;
    LabelSpread(GraphOperator(g, OperatorKind::kSymNorm), y, {0.9, StopRule{}},
                [&](int, const Matrix& m) {
                  ++seen;
                  EXPECT_LE(m.norm(), bound * (1.0 + 1e-12));
                });
    EXPECT_GT(seen, 0);
  }
}

TEST(LabelSpread, ReportsNonConvergence) {
  auto g = RandomGraph(30, 0.2, 3);
  const Matrix y = RandomMatrix(30, 2, 4);
  const auto r = LabelSpread(GraphOperator(g, OperatorKind::kSymNorm), y,
                             {0.99, StopRule{2, 1e-12}});
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 2);
  EXPECT_GT(r.final_delta, 1e-12);
}

TEST(LabelSpread, CommutesWithNodeRelabeling) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = RandomSmallGraph(5, 40, seed);
    const NodeId n = g->num_nodes();
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed);
    rng.Shuffle(std::span<NodeId>(perm));
    std::vector<Edge> edges;
    for (const Edge& e : g->Edges()) edges.push_back({perm[e.u], perm[e.v]});
    auto h = std::make_shared<const SparseGraph>(SparseGraph::FromEdges(edges, n));
    const Matrix y = RandomMatrix(n, 3, seed);
    Matrix py(n, 3);
    for (NodeId i = 0; i < n; ++i) py.row(perm[i]) = y.row(i);
    const auto a = LabelSpread(GraphOperator(g, OperatorKind::kSymNorm), y, {0.8, kTight});
    const auto b = LabelSpread(GraphOperator(h, OperatorKind::kSymNorm), py, {0.8, kTight});
    for (NodeId i = 0; i < n; ++i) {
      EXPECT_LE((a.values.row(i) - b.values.row(perm[i])).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(LabelSpread, ValidatesInputs) {
  auto g = RandomGraph(10, 0.3, 1);
  const Matrix y = Matrix::Zero(10, 2);
  EXPECT_THROW(LabelSpread(GraphOperator(g, OperatorKind::kRowStochastic), y, {}),
               ValidationError);
  EXPECT_THROW(LabelSpread(GraphOperator(g, OperatorKind::kSymNorm),
                           Matrix::Zero(9, 2), {}),
               ValidationError);
  EXPECT_THROW(LabelSpread(GraphOperator(g, OperatorKind::kSymNorm), y,
                           {1.0, StopRule{}}),
               ValidationError);
  EXPECT_THROW(LabelSpread(GraphOperator(g, OperatorKind::kSymNorm), y,
                           {0.5, StopRule{0, 1e-6}}),
               ValidationError);
  EXPECT_THROW(LabelSpread(GraphOperator(g, OperatorKind::kSymNorm), y,
                           {0.5, StopRule{10, -1.0}}),
               ValidationError);
}

TEST(SpreadParams, MuIsInverseAlphaMinusOne) {
  EXPECT_DOUBLE_EQ((SpreadParams{0.8, {}}.Mu()), 0.25);
  EXPECT_TRUE(std::isinf((SpreadParams{0.0, {}}.Mu())));
}

TEST(FixedDiffusion, FixedRowsExactOnEveryIterate) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = RandomSmallGraph(3, 50, seed);
    const NodeId n = g->num_nodes();
    Matrix e = Matrix::Zero(n, 3);
    std::vector<NodeId> fixed;
    for (NodeId i = 0; i < n; i += 3) {
      fixed.push_back(i);
      e.row(i) = RandomMatrix(1, 3, seed * 100 + i);
    }
    const Matrix init = e;
    FixedDiffusion(GraphOperator(g, OperatorKind::kRowStochastic), init, fixed,
                   StopRule{}, [&](int, const Matrix& m) {
                     for (NodeId i : fixed) EXPECT_TRUE(m.row(i) == init.row(i));
                   });
  }
}

TEST(FixedDiffusion, FreeRowsStayWithinFixedRange) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = ConnectedSmallGraph(seed);
    const NodeId n = g->num_nodes();
    Matrix e = Matrix::Zero(n, 2);
    std::vector<NodeId> fixed = {0, n - 1};
    e.row(0) = RandomMatrix(1, 2, seed);
    e.row(n - 1) = RandomMatrix(1, 2, seed + 1);
    const double lo = std::min(0.0, e.minCoeff());
    const double hi = std::max(0.0, e.maxCoeff());
    const auto r = FixedDiffusion(GraphOperator(g, OperatorKind::kRowStochastic),
                                  e, fixed, StopRule{});
    EXPECT_GE(r.values.minCoeff(), lo - 1e-15);
    EXPECT_LE(r.values.maxCoeff(), hi + 1e-15);
  }
}

TEST(FixedDiffusion, MatchesHarmonicSolve) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto g = ConnectedSmallGraph(seed);
    const NodeId n = g->num_nodes();
    std::vector<char> mask(n, 0);
    std::vector<NodeId> fixed;
    Rng rng(seed);
    for (NodeId i = 0; i < n; ++i) {
      if (i == 0 || rng.Bernoulli(0.3)) {
        mask[i] = 1;
        fixed.push_back(i);
      }
    }
    Matrix e = Matrix::Zero(n, 3);
    for (NodeId i : fixed) e.row(i) = RandomMatrix(1, 3, seed * 1000 + i);
    const GraphOperator op(g, OperatorKind::kRowStochastic);
    const auto r = FixedDiffusion(op, e, fixed, kTight);
    ASSERT_TRUE(r.converged);
    const Matrix oracle = FixedOracle(*g, e, mask);
    EXPECT_LE((r.values - oracle).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LE((DenseFixedSolve(op, e, fixed) - oracle).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(FixedDiffusion, AllFixedIsIdentity) {
  auto g = Complete(6);
  const Matrix e = RandomMatrix(6, 2, 1);
  std::vector<NodeId> all = {0, 1, 2, 3, 4, 5};
  const auto r =
      FixedDiffusion(GraphOperator(g, OperatorKind::kRowStochastic), e, all, {});
  EXPECT_TRUE(r.values == e);
  EXPECT_TRUE(r.converged);
}

TEST(FixedDiffusion, UnreachableRowsStayZero) {
  // Two components; only the first has a fixed node.
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {3, 4}};
  auto g = std::make_shared<const SparseGraph>(SparseGraph::FromEdges(edges, 5));
  Matrix e = Matrix::Zero(5, 1);
  e(0, 0) = 1.0;
  const std::vector<NodeId> fixed = {0};
  const GraphOperator op(g, OperatorKind::kRowStochastic);
  const auto r = FixedDiffusion(op, e, fixed, kTight);
  EXPECT_NEAR(r.values(2, 0), 1.0, 1e-9);
  EXPECT_EQ(r.values(3, 0), 0.0);
  EXPECT_EQ(DenseFixedSolve(op, e, fixed)(4, 0), 0.0);
}

TEST(FixedDiffusion, RejectsBadFixedIds) {
  auto g = RandomGraph(5, 0.5, 1);
  const std::vector<NodeId> fixed = {9};
  EXPECT_THROW(FixedDiffusion(GraphOperator(g, OperatorKind::kRowStochastic),
                              Matrix::Zero(5, 1), fixed, {}),
               ValidationError);
}

TEST(DenseOracle, RefusesLargeGraphs) {
  auto g = RandomGraph(250, 0.01, 1);
  EXPECT_THROW(DenseSpreadSolve(GraphOperator(g, OperatorKind::kSymNorm),
                                Matrix::Zero(250, 1), 0.5),
               ValidationError);
}

}  // namespace
}  // namespace csg
