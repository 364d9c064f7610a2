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

#ifndef CSG_BASE_PREDICTOR_H_
#define CSG_BASE_PREDICTOR_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "csg/types.h"

namespace csg {

enum class ModelKind { kLinear, kMlp };

const char* ToString(ModelKind kind);
ModelKind ParseModelKind(const std::string& text);

// Graph-agnostic classifier hyperparameters. `layers` counts linear layers;
// every hidden linear layer of an MLP is followed by batch normalization,
// ReLU and dropout. Linear models ignore layers, hidden and dropout.
struct TrainConfig {
  ModelKind kind = ModelKind::kLinear;
  int layers = 3;
  int hidden = 64;
  double lr = 0.01;
  double dropout = 0.5;
  int epochs = 300;
  int batch_size = 0;  // 0 = full batch
  std::uint64_t seed = 0;
  double weight_decay = 0.0;

  // Adam constants.
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;

  // Batch normalization.
  double norm_momentum = 0.9;  // running = momentum * running + (1 - m) * batch
  double norm_eps = 1e-5;

  void Validate() const;
  int EffectiveLayers() const { return kind == ModelKind::kLinear ? 1 : layers; }
};

struct DenseLayer {
  Matrix weight;  // in x out
  RowVector bias;
  bool normalized = false;
  RowVector gamma;
  RowVector beta;
  RowVector running_mean;
  RowVector running_var;

  Eigen::Index in_dim() const { return weight.rows(); }
  Eigen::Index out_dim() const { return weight.cols(); }
};

// Trained (or hand-built) classifier. Immutable once returned by Train.
class BaseModel {
 public:
  BaseModel() = default;
  BaseModel(ModelKind kind, std::vector<DenseLayer> layers,
            double norm_eps = 1e-5);

  // Uniform fan-in initialization: weights and biases ~ U(-1/sqrt(in),
  // 1/sqrt(in)); gamma = 1, beta = 0, running stats (0, 1).
  static BaseModel Initialize(int num_features, int num_classes,
                              const TrainConfig& config);

  ModelKind kind() const { return kind_; }
  int num_features() const;
  int num_classes() const;
  std::span<const DenseLayer> layers() const { return layers_; }
  std::span<DenseLayer> mutable_layers() { return layers_; }
  double norm_eps() const { return norm_eps_; }

  // Trainable scalars: weights, biases, and normalization scale/shift.
  std::int64_t CountParameters() const;

  // Visits every trainable parameter block in a fixed order.
  void ForEachParameter(const std::function<void(std::span<double>)>& fn);
  void ForEachParameter(
      const std::function<void(std::span<const double>)>& fn) const;

  bool AllFinite() const;

  void Save(const std::filesystem::path& path) const;
  static BaseModel Load(const std::filesystem::path& path);

 private:
  ModelKind kind_ = ModelKind::kLinear;
  std::vector<DenseLayer> layers_;
  double norm_eps_ = 1e-5;
};

// Row-stochastic class probabilities for every row of `features`, in
// inference mode (no dropout, running normalization statistics).
Matrix PredictProba(const BaseModel& model, const Matrix& features);

std::int64_t CountParameters(const BaseModel& model);

struct TrainingLog {
  std::vector<double> train_loss;       // per epoch, before the update
  std::vector<double> valid_accuracy;   // per epoch, after the update
  int best_epoch = -1;
  double best_valid_accuracy = 0.0;
};

// Full-batch (or mini-batch) Adam on mean cross-entropy over `train` rows.
// Only `train` rows contribute gradients; `valid` rows only select the epoch
// whose model is returned (highest validation accuracy, earliest on ties).
// Throws ValidationError on empty train set or bad shapes, TrainingError if
// the loss or parameters become non-finite.
BaseModel Train(const Matrix& features, const LabeledNodes& train,
                const LabeledNodes& valid, int num_classes,
                const TrainConfig& config, TrainingLog* log = nullptr);

// Mean cross-entropy of `model` on `rows` with training-mode semantics
// (batch statistics, no dropout), and optionally its gradient laid out like
// the model's parameters.
double LossAndGradient(const BaseModel& model, const Matrix& features,
                       const LabeledNodes& rows, BaseModel* gradient);

struct GradCheckReport {
  double max_relative_error = 0.0;
  // Flattened per-parameter values in ForEachParameter order.
  std::vector<double> analytic;
  std::vector<double> numeric;
};

// Compares analytic gradients of the training-mode loss (dropout disabled)
// against central differences with the given step, for every parameter.
// The relative error of one entry is |a - f| / max(|a|, |f|, 1e-4).
GradCheckReport GradCheck(const BaseModel& model, const Matrix& features,
                          const LabeledNodes& rows, double step = 1e-5);
// Same, on a freshly initialized model built from `config` (seeded).
GradCheckReport GradCheck(const TrainConfig& config, const Matrix& features,
                          const LabeledNodes& rows, int num_classes,
                          double step = 1e-5);

}  // namespace csg

#endif  // CSG_BASE_PREDICTOR_H_
