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

#include "csg/base_predictor.h"

#include <filesystem>
#include <fstream>
#include <algorithm>

#include <gtest/gtest.h>

#include "csg/errors.h"
#include "csg/random.h"
#include "synthetic.h"

namespace csg {
namespace {

using testing::RandomLabeled;
using testing::RandomMatrix;

LabeledNodes Range(NodeId begin, NodeId end, const std::vector<int>& labels) {
  LabeledNodes out;
  for (NodeId i = begin; i < end; ++i) {
    out.nodes.push_back(i);
    out.labels.push_back(labels[i]);
  }
  return out;
}

// Two Gaussian blobs separated along the first axis.
struct Toy {
  Matrix x;
  std::vector<int> y;
};

Toy SeparableToy(NodeId n, std::uint64_t seed) {
  Rng rng(seed);
  Toy t{Matrix(n, 2), std::vector<int>(n)};
  for (NodeId i = 0; i < n; ++i) {
    t.y[i] = i % 2;
    t.x(i, 0) = (t.y[i] ? 2.0 : -2.0) + rng.Uniform(-0.5, 0.5);
    t.x(i, 1) = rng.Uniform(-1.0, 1.0);
  }
  return t;
}

TrainConfig Mlp(int layers, int hidden, std::uint64_t seed) {
  TrainConfig c;
  c.kind = ModelKind::kMlp;
  c.layers = layers;
  c.hidden = hidden;
  c.seed = seed;
  return c;
}

TEST(BaseModel, ZeroLinearModelPredictsUniform) {
  DenseLayer layer;
  layer.weight = Matrix::Zero(4, 5);
  layer.bias = RowVector::Zero(5);
  const BaseModel model(ModelKind::kLinear, {layer});
  const Matrix p = PredictProba(model, RandomMatrix(7, 4, 1));
  EXPECT_LE((p.array() - 0.2).abs().maxCoeff(), 1e-15);
}

TEST(BaseModel, ProbabilitiesAreRowStochastic) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (const TrainConfig& c : {TrainConfig{}, Mlp(3, 8, seed)}) {
      const BaseModel model = BaseModel::Initialize(6, 4, c);
      Matrix x = 50.0 * RandomMatrix(30, 6, seed);
      const Matrix p = PredictProba(model, x);
      EXPECT_GE(p.minCoeff(), 0.0);
      for (Eigen::Index i = 0; i < p.rows(); ++i) {
        EXPECT_NEAR(p.row(i).sum(), 1.0, 1e-12);
      }
    }
  }
}

TEST(BaseModel, ParameterCounts) {
  EXPECT_EQ(BaseModel::Initialize(10, 3, TrainConfig{}).CountParameters(), 10 * 3 + 3);
  // 10 -> 8 (bn) -> 8 (bn) -> 3
  const auto mlp = BaseModel::Initialize(10, 3, Mlp(3, 8, 0));
  EXPECT_EQ(CountParameters(mlp), (10 * 8 + 8 + 16) + (8 * 8 + 8 + 16) + (8 * 3 + 3));
}

TEST(BaseModel, InitializationWithinFanInBound) {
  const auto model = BaseModel::Initialize(16, 4, Mlp(2, 9, 3));
  const auto layers = model.layers();
  EXPECT_LE(layers[0].weight.cwiseAbs().maxCoeff(), 0.25);
  EXPECT_LE(layers[1].weight.cwiseAbs().maxCoeff(), 1.0 / 3.0);
  EXPECT_TRUE(layers[0].gamma.isOnes());
  EXPECT_TRUE(layers[0].beta.isZero());
}

TEST(GradCheck, LinearModel) {
  const Matrix x = RandomMatrix(20, 5, 1);
  const LabeledNodes rows = RandomLabeled(20, 3, 12, 2);
  TrainConfig c;
  c.seed = 4;
  EXPECT_LT(GradCheck(c, x, rows, 3).max_relative_error, 1e-6);
}

TEST(GradCheck, MlpWithBatchNorm) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Matrix x = RandomMatrix(16, 4, seed);
    const LabeledNodes rows = RandomLabeled(16, 3, 10, seed + 1);
    const GradCheckReport r = GradCheck(Mlp(3, 5, seed), x, rows, 3);
    EXPECT_LT(r.max_relative_error, 1e-4) << "seed " << seed;
    EXPECT_EQ(r.analytic.size(), r.numeric.size());
  }
}

TEST(Train, SeparableToyReachesFullTrainingAccuracy) {
  const Toy t = SeparableToy(60, 1);
  const LabeledNodes train = Range(0, 60, t.y);
  TrainConfig c;
  c.lr = 0.05;
  c.epochs = 200;
  const BaseModel model = Train(t.x, train, train, 2, c);
  const auto pred = ArgmaxRows(PredictProba(model, t.x));
  for (NodeId i = 0; i < 60; ++i) EXPECT_EQ(pred[i], t.y[i]);
}

TEST(Train, LinearFullBatchLossNonIncreasingAtSmallLr) {
  const Matrix x = RandomMatrix(80, 6, 3);
  const LabeledNodes train = RandomLabeled(80, 4, 60, 5);
  TrainConfig c;
  c.lr = 1e-3;
  c.epochs = 150;
  TrainingLog log;
  Train(x, train, train, 4, c, &log);
  ASSERT_EQ(log.train_loss.size(), 150u);
  for (std::size_t e = 1; e < log.train_loss.size(); ++e) {
    EXPECT_LE(log.train_loss[e], log.train_loss[e - 1] + 1e-8) << "epoch " << e;
  }
}

TEST(Train, ReturnsEarliestBestValidationEpoch) {
  const Toy t = SeparableToy(80, 2);
  const LabeledNodes train = Range(0, 40, t.y);
  const LabeledNodes valid = Range(40, 80, t.y);
  TrainConfig c = Mlp(2, 8, 1);
  c.epochs = 40;
  TrainingLog log;
  const BaseModel model = Train(t.x, train, valid, 2, c, &log);
  const auto best = std::max_element(log.valid_accuracy.begin(), log.valid_accuracy.end());
  EXPECT_EQ(log.best_epoch, best - log.valid_accuracy.begin());
  EXPECT_EQ(log.best_valid_accuracy, *best);
  // The returned snapshot reproduces the logged validation accuracy.
  const auto pred = ArgmaxRows(PredictProba(model, t.x));
  int hits = 0;
  for (std::size_t r = 0; r < valid.size(); ++r) hits += pred[valid.nodes[r]] == valid.labels[r];
  EXPECT_DOUBLE_EQ(hits / 40.0, log.best_valid_accuracy);
}

TEST(Train, IgnoresRowsOutsideTrainAndValid) {
  Toy t = SeparableToy(60, 3);
  const LabeledNodes train = Range(0, 20, t.y);
  const LabeledNodes valid = Range(20, 40, t.y);
  TrainConfig c = Mlp(3, 6, 2);
  c.epochs = 30;
  const BaseModel a = Train(t.x, train, valid, 2, c);
  t.x.bottomRows(20) = RandomMatrix(20, 2, 99);
  const BaseModel b = Train(t.x, train, valid, 2, c);
  const Matrix probe = RandomMatrix(5, 2, 7);
  EXPECT_TRUE(PredictProba(a, probe) == PredictProba(b, probe));
}

TEST(Train, DeterministicGivenSeed) {
  const Toy t = SeparableToy(50, 4);
  const LabeledNodes train = Range(0, 30, t.y);
  const LabeledNodes valid = Range(30, 50, t.y);
  TrainConfig c = Mlp(3, 8, 11);
  c.epochs = 20;
  const Matrix a = PredictProba(Train(t.x, train, valid, 2, c), t.x);
  const Matrix b = PredictProba(Train(t.x, train, valid, 2, c), t.x);
  EXPECT_TRUE(a == b);
}

TEST(Train, MiniBatchesRun) {
  const Toy t = SeparableToy(64, 5);
  const LabeledNodes train = Range(0, 64, t.y);
  TrainConfig c;
  c.batch_size = 16;
  c.epochs = 50;
  c.lr = 0.05;
  TrainingLog log;
  Train(t.x, train, train, 2, c, &log);
  EXPECT_GT(log.best_valid_accuracy, 0.95);
}

TEST(Train, RejectsBadInputs) {
  const Toy t = SeparableToy(10, 1);
  TrainConfig c;
  EXPECT_THROW(Train(t.x, LabeledNodes{}, LabeledNodes{}, 2, c), ValidationError);
  LabeledNodes bad = Range(0, 5, t.y);
  bad.labels[0] = 7;
  EXPECT_THROW(Train(t.x, bad, LabeledNodes{}, 2, c), ValidationError);
  TrainConfig mlp = Mlp(1, 8, 0);
  EXPECT_THROW(mlp.Validate(), ValidationError);
  TrainConfig drop;
  drop.dropout = 1.0;
  EXPECT_THROW(drop.Validate(), ValidationError);
}

TEST(Train, DivergenceIsTrainingError) {
  const Toy t = SeparableToy(40, 6);
  const LabeledNodes train = Range(0, 40, t.y);
  TrainConfig c;
  c.lr = 1e308;
  c.epochs = 20;
  Matrix x = 1e200 * t.x;
  EXPECT_THROW(Train(x, train, train, 2, c), TrainingError);
}

TEST(Checkpoint, RoundTripsPredictions) {
  const auto model = BaseModel::Initialize(5, 3, Mlp(3, 4, 2));
  const auto path = std::filesystem::temp_directory_path() / "csg_model_rt.bin";
  model.Save(path);
  const BaseModel back = BaseModel::Load(path);
  const Matrix x = RandomMatrix(9, 5, 1);
  EXPECT_TRUE(PredictProba(model, x) == PredictProba(back, x));
  EXPECT_EQ(back.kind(), ModelKind::kMlp);
  std::filesystem::remove(path);
}

TEST(Checkpoint, RejectsForeignFiles) {
  const auto path = std::filesystem::temp_directory_path() / "csg_model_bad.bin";
  std::ofstream(path) << "not a model";
  EXPECT_THROW(BaseModel::Load(path), ValidationError);
  std::filesystem::remove(path);
}

TEST(ModelKind, Parsing) {
  EXPECT_EQ(ParseModelKind("mlp"), ModelKind::kMlp);
  EXPECT_EQ(ParseModelKind(ToString(ModelKind::kLinear)), ModelKind::kLinear);
  EXPECT_THROW(ParseModelKind("gcn"), ValidationError);
}

}  // namespace
}  // namespace csg
