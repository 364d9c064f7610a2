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

#include <memory>
#include <vector>

#include <benchmark/benchmark.h>

#include "csg/base_predictor.h"
#include "csg/correct_smooth.h"
#include "csg/graph.h"
#include "csg/propagation.h"
#include "csg/random.h"
#include "csg/spectral.h"

namespace {

using namespace csg;

// Sparse random graph with average degree about 2 * per_node.
std::shared_ptr<const SparseGraph> MakeGraph(NodeId n, int per_node,
                                             std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * per_node);
  for (NodeId u = 0; u < n; ++u) {
    for (int k = 0; k < per_node; ++k) {
      edges.push_back({u, static_cast<NodeId>(rng.Below(n))});
    }
  }
  return std::make_shared<const SparseGraph>(SparseGraph::FromEdges(edges, n));
}

Matrix MakeMatrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.Uniform(-1.0, 1.0);
  return m;
}

void BM_Spmm(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  const GraphOperator op(MakeGraph(n, 4, 1), OperatorKind::kSymNorm);
  const Matrix x = MakeMatrix(n, 8, 2);
  Matrix y;
  for (auto _ : state) {
    op.Apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * op.graph().num_edges() * 2);
}
BENCHMARK(BM_Spmm)->Arg(1 << 12)->Arg(1 << 16);

void BM_LabelSpread(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  const GraphOperator op(MakeGraph(n, 4, 3), OperatorKind::kSymNorm);
  const Matrix init = MakeMatrix(n, 7, 4);
  int iters = 0;
  for (auto _ : state) {
    const PropagationResult r = LabelSpread(op, init, {0.8, StopRule{}});
    iters = r.iterations;
    benchmark::DoNotOptimize(r.values.data());
  }
  state.counters["sweeps"] = iters;
}
BENCHMARK(BM_LabelSpread)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

void BM_FixedDiffusion(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  const GraphOperator op(MakeGraph(n, 4, 5), OperatorKind::kRowStochastic);
  const Matrix init = MakeMatrix(n, 7, 6);
  std::vector<NodeId> fixed;
  for (NodeId u = 0; u < n; u += 2) fixed.push_back(u);
  for (auto _ : state) {
    const PropagationResult r = FixedDiffusion(op, init, fixed, StopRule{});
    benchmark::DoNotOptimize(r.values.data());
  }
}
BENCHMARK(BM_FixedDiffusion)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

void BM_RegMatvec(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  const RegularizedOperator op(MakeGraph(n, 4, 7));
  const Vector x = MakeMatrix(n, 1, 8).col(0);
  for (auto _ : state) {
    Vector y = RegMatvec(op, x);
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_RegMatvec)->Arg(1 << 12)->Arg(1 << 16);

void BM_TopEigenpairs(benchmark::State& state) {
  const RegularizedOperator op(MakeGraph(2000, 4, 9));
  EigenSolverOptions options;
  options.k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const SpectralEmbedding e = TopEigenpairs(op, options);
    benchmark::DoNotOptimize(e.values.data());
  }
}
BENCHMARK(BM_TopEigenpairs)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_CorrectAndSmooth(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  auto g = MakeGraph(n, 4, 10);
  const GraphOperator sym(g, OperatorKind::kSymNorm);
  const GraphOperator rw(g, OperatorKind::kRowStochastic);
  Matrix z = MakeMatrix(n, 5, 11).array().abs();
  z.array().colwise() /= z.rowwise().sum().array();
  Rng rng(12);
  LabeledNodes train, valid;
  for (NodeId u = 0; u < n; ++u) {
    LabeledNodes& dst = u % 5 == 0 ? valid : train;
    if (u % 5 < 3) {
      dst.nodes.push_back(u);
      dst.labels.push_back(static_cast<int>(rng.Below(5)));
    }
  }
  CorrectionConfig correction;
  correction.variant = state.range(1) ? CorrectionVariant::kFDiffScale
                                      : CorrectionVariant::kAutoscale;
  for (auto _ : state) {
    const PostProcessResult r = RunPostProcessing(z, train, valid, sym, rw, correction,
                                                  SmoothConfig{}, PipelineMode::kFull);
    benchmark::DoNotOptimize(r.scores.data());
  }
}
BENCHMARK(BM_CorrectAndSmooth)
    ->Args({1 << 14, 0})
    ->Args({1 << 14, 1})
    ->Unit(benchmark::kMillisecond);

void BM_TrainEpoch(benchmark::State& state) {
  const NodeId n = 4096;
  const Matrix x = MakeMatrix(n, 64, 13);
  Rng rng(14);
  LabeledNodes train;
  for (NodeId u = 0; u < n; ++u) {
    train.nodes.push_back(u);
    train.labels.push_back(static_cast<int>(rng.Below(7)));
  }
  TrainConfig config;
  config.kind = state.range(0) ? ModelKind::kMlp : ModelKind::kLinear;
  config.epochs = 1;
  for (auto _ : state) {
    const BaseModel m = Train(x, train, train, 7, config);
    benchmark::DoNotOptimize(&m);
  }
}
BENCHMARK(BM_TrainEpoch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
