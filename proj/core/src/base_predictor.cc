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

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <string>

#include "csg/errors.h"
#include "csg/matrix_io.h"
#include "csg/random.h"

namespace csg {
namespace {

constexpr char kModelMagic[8] = {'C', 'S', 'G', 'M', 'O', 'D', 'E', 'L'};
constexpr std::uint32_t kModelVersion = 1;

// Activations kept from a training-mode forward pass for backprop.
struct LayerCache {
  Matrix input;       // layer input (after the previous dropout)
  Matrix normalized;  // xhat
  RowVector inv_std;
  RowVector batch_mean;
  RowVector batch_var;
  Matrix activated;   // gamma * xhat + beta, before ReLU
  Matrix keep_mask;   // dropout scale per entry (empty when dropout is off)
};

struct ForwardOptions {
  bool training = false;
  double dropout = 0.0;
  Rng* rng = nullptr;
};

Matrix Gather(const Matrix& features, std::span<const NodeId> nodes) {
  Matrix out(static_cast<Eigen::Index>(nodes.size()), features.cols());
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    out.row(static_cast<Eigen::Index>(r)) = features.row(nodes[r]);
  }
  return out;
}

void SoftmaxRowsInPlace(Matrix& logits) {
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    auto row = logits.row(i);
    const double top = row.maxCoeff();
    row.array() = (row.array() - top).exp();
    row /= row.sum();
  }
}

// Returns logits; fills caches when training.
Matrix Forward(const BaseModel& model, const Matrix& x,
               const ForwardOptions& opts, std::vector<LayerCache>* caches) {
  auto layers = model.layers();
  if (caches) caches->assign(layers.size(), LayerCache{});
  Matrix h = x;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const DenseLayer& layer = layers[l];
    Matrix z = h * layer.weight;
    z.rowwise() += layer.bias;
    LayerCache* cache = caches ? &(*caches)[l] : nullptr;
    if (cache) cache->input = std::move(h);
    if (l + 1 == layers.size()) return z;

    if (layer.normalized) {
      RowVector mean;
      RowVector var;
      if (opts.training) {
        mean = z.colwise().mean();
        var = (z.rowwise() - mean).array().square().colwise().mean();
      } else {
        mean = layer.running_mean;
        var = layer.running_var;
      }
      RowVector inv_std =
          (var.array() + model.norm_eps()).rsqrt().matrix();
      Matrix xhat = (z.rowwise() - mean).array().rowwise() * inv_std.array();
      z = (xhat.array().rowwise() * layer.gamma.array()).rowwise() +
          layer.beta.array();
      if (cache) {
        cache->normalized = std::move(xhat);
        cache->inv_std = inv_std;
        cache->batch_mean = mean;
        cache->batch_var = var;
      }
    }
    if (cache) cache->activated = z;
    h = z.cwiseMax(0.0);
    if (opts.training && opts.dropout > 0.0) {
      const double keep = 1.0 - opts.dropout;
      Matrix mask(h.rows(), h.cols());
      for (Eigen::Index i = 0; i < mask.size(); ++i) {
        mask.data()[i] = opts.rng->Bernoulli(keep) ? 1.0 / keep : 0.0;
      }
      h.array() *= mask.array();
      if (cache) cache->keep_mask = std::move(mask);
    }
  }
  return h;  // unreachable for non-empty models
}

double CrossEntropy(const Matrix& logits, std::span<const int> labels,
                    Matrix* probs_out) {
  Matrix probs = logits;
  double loss = 0.0;
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const double top = logits.row(i).maxCoeff();
    const double lse =
        top + std::log((logits.row(i).array() - top).exp().sum());
    loss += lse - logits(i, labels[i]);
  }
  if (probs_out) {
    SoftmaxRowsInPlace(probs);
    *probs_out = std::move(probs);
  }
  return loss / static_cast<double>(logits.rows());
}

// Backprop of mean cross-entropy through the cached forward pass.
void Backward(const BaseModel& model, const std::vector<LayerCache>& caches,
              const Matrix& probs, std::span<const int> labels,
              BaseModel& grad) {
  auto layers = model.layers();
  auto grad_layers = grad.mutable_layers();
  const double inv_n = 1.0 / static_cast<double>(probs.rows());
  Matrix delta = probs;
  for (Eigen::Index i = 0; i < delta.rows(); ++i) delta(i, labels[i]) -= 1.0;
  delta *= inv_n;

  for (std::size_t l = layers.size(); l-- > 0;) {
    const DenseLayer& layer = layers[l];
    const LayerCache& cache = caches[l];
    DenseLayer& g = grad_layers[l];
    if (l + 1 < layers.size()) {
      // delta is d(loss)/d(layer output after dropout).
      if (cache.keep_mask.size() > 0) delta.array() *= cache.keep_mask.array();
      delta.array() *= (cache.activated.array() > 0.0).cast<double>();
      if (layer.normalized) {
        const double n = static_cast<double>(delta.rows());
        g.gamma = (delta.array() * cache.normalized.array()).colwise().sum();
        g.beta = delta.colwise().sum();
        Matrix dxhat = delta.array().rowwise() * layer.gamma.array();
        RowVector sum_dxhat = dxhat.colwise().sum();
        RowVector sum_dxhat_xhat =
            (dxhat.array() * cache.normalized.array()).colwise().sum();
        Matrix dz = (n * dxhat.array()).matrix();
        dz.rowwise() -= sum_dxhat;
        dz.array() -=
            cache.normalized.array().rowwise() * sum_dxhat_xhat.array();
        dz.array().rowwise() *= (cache.inv_std.array() / n);
        delta = std::move(dz);
      }
    }
    g.weight.noalias() = cache.input.transpose() * delta;
    g.bias = delta.colwise().sum();
    if (l > 0) {
      Matrix upstream = delta * layer.weight.transpose();
      delta = std::move(upstream);
    }
  }
}

BaseModel ZerosLike(const BaseModel& model) {
  std::vector<DenseLayer> layers(model.layers().begin(), model.layers().end());
  for (DenseLayer& l : layers) {
    l.weight.setZero();
    l.bias.setZero();
    if (l.normalized) {
      l.gamma.setZero();
      l.beta.setZero();
      l.running_mean.setZero();
      l.running_var.setZero();
    }
  }
  return BaseModel(model.kind(), std::move(layers), model.norm_eps());
}

std::vector<std::span<double>> Blocks(BaseModel& model) {
  std::vector<std::span<double>> blocks;
  model.ForEachParameter([&](std::span<double> b) { blocks.push_back(b); });
  return blocks;
}

double Accuracy(const Matrix& logits, std::span<const int> labels) {
  if (labels.empty()) return 0.0;
  std::int64_t hits = 0;
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    Eigen::Index best = 0;
    logits.row(i).maxCoeff(&best);
    hits += static_cast<int>(best) == labels[i];
  }
  return static_cast<double>(hits) / static_cast<double>(labels.size());
}

void CheckRows(const Matrix& features, const LabeledNodes& rows,
               int num_classes, const char* what) {
  if (rows.labels.size() != rows.nodes.size()) {
    throw ValidationError(std::string(what) + ": label/node count mismatch");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows.nodes[r] < 0 || rows.nodes[r] >= features.rows()) {
      throw ValidationError(std::string(what) + ": node " +
                            std::to_string(rows.nodes[r]) +
                            " has no feature row");
    }
    if (rows.labels[r] < 0 || rows.labels[r] >= num_classes) {
      throw ValidationError(std::string(what) + ": label " +
                            std::to_string(rows.labels[r]) +
                            " outside [0, " + std::to_string(num_classes) +
                            ")");
    }
  }
}

}  // namespace

const char* ToString(ModelKind kind) {
  return kind == ModelKind::kLinear ? "linear" : "mlp";
}

ModelKind ParseModelKind(const std::string& text) {
  if (text == "linear") return ModelKind::kLinear;
  if (text == "mlp") return ModelKind::kMlp;
  throw ValidationError("unknown model kind '" + text + "'");
}

void TrainConfig::Validate() const {
  if (kind == ModelKind::kMlp && layers < 2) {
    throw ValidationError("an MLP needs at least 2 layers");
  }
  if (kind == ModelKind::kMlp && hidden < 1) {
    throw ValidationError("hidden width must be positive");
  }
  if (!(lr > 0.0)) throw ValidationError("learning rate must be positive");
  if (!(dropout >= 0.0 && dropout < 1.0)) {
    throw ValidationError("dropout must lie in [0, 1)");
  }
  if (epochs < 1) throw ValidationError("epochs must be positive");
  if (batch_size < 0) throw ValidationError("batch size must be >= 0");
  if (!(weight_decay >= 0.0)) throw ValidationError("weight decay must be >= 0");
}

BaseModel::BaseModel(ModelKind kind, std::vector<DenseLayer> layers,
                     double norm_eps)
    : kind_(kind), layers_(std::move(layers)), norm_eps_(norm_eps) {
  if (layers_.empty()) throw ValidationError("model needs at least one layer");
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const DenseLayer& layer = layers_[l];
    if (layer.bias.size() != layer.out_dim()) {
      throw ValidationError("bias size does not match layer width");
    }
    if (l > 0 && layer.in_dim() != layers_[l - 1].out_dim()) {
      throw ValidationError("layer input width does not match previous layer");
    }
    if (layer.normalized &&
        (layer.gamma.size() != layer.out_dim() ||
         layer.beta.size() != layer.out_dim() ||
         layer.running_mean.size() != layer.out_dim() ||
         layer.running_var.size() != layer.out_dim())) {
      throw ValidationError("normalization parameters have the wrong size");
    }
  }
}

BaseModel BaseModel::Initialize(int num_features, int num_classes,
                                const TrainConfig& config) {
  config.Validate();
  if (num_features < 1 || num_classes < 1) {
    throw ValidationError("model needs at least one feature and one class");
  }
  Rng rng(config.seed);
  const int depth = config.EffectiveLayers();
  std::vector<DenseLayer> layers;
  int in = num_features;
  for (int l = 0; l < depth; ++l) {
    const bool last = l + 1 == depth;
    const int out = last ? num_classes : config.hidden;
    DenseLayer layer;
    const double bound = 1.0 / std::sqrt(static_cast<double>(in));
    layer.weight.resize(in, out);
    for (Eigen::Index i = 0; i < layer.weight.size(); ++i) {
      layer.weight.data()[i] = rng.Uniform(-bound, bound);
    }
    layer.bias.resize(out);
    for (Eigen::Index i = 0; i < out; ++i) layer.bias(i) = rng.Uniform(-bound, bound);
    if (!last) {
      layer.normalized = true;
      layer.gamma = RowVector::Ones(out);
      layer.beta = RowVector::Zero(out);
      layer.running_mean = RowVector::Zero(out);
      layer.running_var = RowVector::Ones(out);
    }
    layers.push_back(std::move(layer));
    in = out;
  }
  return BaseModel(config.kind, std::move(layers), config.norm_eps);
}

int BaseModel::num_features() const {
  return layers_.empty() ? 0 : static_cast<int>(layers_.front().in_dim());
}

int BaseModel::num_classes() const {
  return layers_.empty() ? 0 : static_cast<int>(layers_.back().out_dim());
}

std::int64_t BaseModel::CountParameters() const {
  std::int64_t count = 0;
  ForEachParameter([&](std::span<const double> b) {
    count += static_cast<std::int64_t>(b.size());
  });
  return count;
}

void BaseModel::ForEachParameter(
    const std::function<void(std::span<double>)>& fn) {
  for (DenseLayer& l : layers_) {
    fn({l.weight.data(), static_cast<std::size_t>(l.weight.size())});
    fn({l.bias.data(), static_cast<std::size_t>(l.bias.size())});
    if (l.normalized) {
      fn({l.gamma.data(), static_cast<std::size_t>(l.gamma.size())});
      fn({l.beta.data(), static_cast<std::size_t>(l.beta.size())});
    }
  }
}

void BaseModel::ForEachParameter(
    const std::function<void(std::span<const double>)>& fn) const {
  for (const DenseLayer& l : layers_) {
    fn({l.weight.data(), static_cast<std::size_t>(l.weight.size())});
    fn({l.bias.data(), static_cast<std::size_t>(l.bias.size())});
    if (l.normalized) {
      fn({l.gamma.data(), static_cast<std::size_t>(l.gamma.size())});
      fn({l.beta.data(), static_cast<std::size_t>(l.beta.size())});
    }
  }
}

bool BaseModel::AllFinite() const {
  bool finite = true;
  ForEachParameter([&](std::span<const double> b) {
    for (double v : b) finite = finite && std::isfinite(v);
  });
  for (const DenseLayer& l : layers_) {
    if (l.normalized) {
      finite = finite && l.running_mean.allFinite() && l.running_var.allFinite();
    }
  }
  return finite;
}

void BaseModel::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write checkpoint " + path.string());
  out.write(kModelMagic, 8);
  WriteU32(out, kModelVersion);
  WriteU32(out, static_cast<std::uint32_t>(kind_));
  WriteF64(out, norm_eps_);
  WriteU32(out, static_cast<std::uint32_t>(layers_.size()));
  for (const DenseLayer& l : layers_) {
    WriteU64(out, static_cast<std::uint64_t>(l.in_dim()));
    WriteU64(out, static_cast<std::uint64_t>(l.out_dim()));
    WriteU32(out, l.normalized ? 1u : 0u);
    for (Eigen::Index i = 0; i < l.weight.size(); ++i) WriteF64(out, l.weight.data()[i]);
    for (Eigen::Index i = 0; i < l.bias.size(); ++i) WriteF64(out, l.bias(i));
    if (l.normalized) {
      for (const RowVector* v : {&l.gamma, &l.beta, &l.running_mean, &l.running_var}) {
        for (Eigen::Index i = 0; i < v->size(); ++i) WriteF64(out, (*v)(i));
      }
    }
  }
  if (!out) throw ValidationError("write failed for " + path.string());
}

BaseModel BaseModel::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open checkpoint " + path.string());
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kModelMagic, 8) != 0) {
    throw ValidationError(path.string() + ": not a csgraph checkpoint");
  }
  const std::uint32_t version = ReadU32(in);
  if (version != kModelVersion) {
    throw ValidationError(path.string() + ": unsupported checkpoint version " +
                          std::to_string(version));
  }
  const std::uint32_t kind = ReadU32(in);
  if (kind > 1) throw ValidationError(path.string() + ": bad model kind");
  const double eps = ReadF64(in);
  const std::uint32_t count = ReadU32(in);
  if (count == 0 || count > 1024) {
    throw ValidationError(path.string() + ": bad layer count");
  }
  std::vector<DenseLayer> layers(count);
  for (DenseLayer& l : layers) {
    const std::uint64_t in_dim = ReadU64(in);
    const std::uint64_t out_dim = ReadU64(in);
    if (in_dim == 0 || out_dim == 0 || in_dim > (1u << 24) || out_dim > (1u << 24)) {
      throw ValidationError(path.string() + ": bad layer shape");
    }
    l.normalized = ReadU32(in) != 0;
    l.weight.resize(static_cast<Eigen::Index>(in_dim), static_cast<Eigen::Index>(out_dim));
    for (Eigen::Index i = 0; i < l.weight.size(); ++i) l.weight.data()[i] = ReadF64(in);
    l.bias.resize(static_cast<Eigen::Index>(out_dim));
    for (Eigen::Index i = 0; i < l.bias.size(); ++i) l.bias(i) = ReadF64(in);
    if (l.normalized) {
      for (RowVector* v : {&l.gamma, &l.beta, &l.running_mean, &l.running_var}) {
        v->resize(static_cast<Eigen::Index>(out_dim));
        for (Eigen::Index i = 0; i < v->size(); ++i) (*v)(i) = ReadF64(in);
      }
    }
  }
  return BaseModel(static_cast<ModelKind>(kind), std::move(layers), eps);
}

Matrix PredictProba(const BaseModel& model, const Matrix& features) {
  if (features.cols() != model.num_features()) {
    throw ValidationError("model expects " +
                          std::to_string(model.num_features()) +
                          " feature columns, got " +
                          std::to_string(features.cols()));
  }
  Matrix probs = Forward(model, features, ForwardOptions{}, nullptr);
  SoftmaxRowsInPlace(probs);
  return probs;
}

std::int64_t CountParameters(const BaseModel& model) {
  return model.CountParameters();
}

double LossAndGradient(const BaseModel& model, const Matrix& features,
                       const LabeledNodes& rows, BaseModel* gradient) {
  CheckRows(features, rows, model.num_classes(), "loss");
  if (rows.empty()) throw ValidationError("loss over an empty row set");
  const Matrix x = Gather(features, rows.nodes);
  ForwardOptions opts;
  opts.training = true;
  std::vector<LayerCache> caches;
  const Matrix logits = Forward(model, x, opts, &caches);
  Matrix probs;
  const double loss = CrossEntropy(logits, rows.labels, &probs);
  if (gradient) {
    *gradient = ZerosLike(model);
    Backward(model, caches, probs, rows.labels, *gradient);
  }
  return loss;
}

BaseModel Train(const Matrix& features, const LabeledNodes& train,
                const LabeledNodes& valid, int num_classes,
                const TrainConfig& config, TrainingLog* log) {
  config.Validate();
  if (train.empty()) throw ValidationError("training set is empty");
  if (num_classes < 1) throw ValidationError("need at least one class");
  CheckRows(features, train, num_classes, "train");
  CheckRows(features, valid, num_classes, "valid");

  BaseModel model = BaseModel::Initialize(static_cast<int>(features.cols()),
                                          num_classes, config);
  BaseModel grad = ZerosLike(model);
  BaseModel first_moment = ZerosLike(model);
  BaseModel second_moment = ZerosLike(model);
  auto param_blocks = Blocks(model);
  auto grad_blocks = Blocks(grad);
  auto m_blocks = Blocks(first_moment);
  auto v_blocks = Blocks(second_moment);

  Rng dropout_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  Rng order_rng(config.seed ^ 0xc2b2ae3d27d4eb4fULL);
  const Matrix valid_x = Gather(features, valid.nodes);
  const Matrix full_train_x = Gather(features, train.nodes);

  const std::size_t n_train = train.size();
  const std::size_t batch =
      config.batch_size > 0 ? static_cast<std::size_t>(config.batch_size)
                            : n_train;
  std::vector<std::size_t> order(n_train);
  std::iota(order.begin(), order.end(), 0);

  BaseModel best = model;
  double best_acc = -1.0;
  int best_epoch = -1;
  std::int64_t step = 0;
  TrainingLog local_log;

  ForwardOptions opts;
  opts.training = true;
  opts.dropout = config.kind == ModelKind::kMlp ? config.dropout : 0.0;
  opts.rng = &dropout_rng;

  std::vector<LayerCache> caches;
  Matrix probs;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    if (batch < n_train) order_rng.Shuffle(std::span<std::size_t>(order));
    double epoch_loss = 0.0;
    std::size_t batches = 0;
    for (std::size_t start = 0; start < n_train; start += batch) {
      const std::size_t stop = std::min(n_train, start + batch);
      Matrix xb;
      std::vector<int> yb;
      if (batch >= n_train) {
        xb = full_train_x;
        yb = train.labels;
      } else {
        xb.resize(static_cast<Eigen::Index>(stop - start), features.cols());
        yb.resize(stop - start);
        for (std::size_t r = start; r < stop; ++r) {
          xb.row(static_cast<Eigen::Index>(r - start)) =
              full_train_x.row(static_cast<Eigen::Index>(order[r]));
          yb[r - start] = train.labels[order[r]];
        }
      }
      const Matrix logits = Forward(model, xb, opts, &caches);
      const double loss = CrossEntropy(logits, yb, &probs);
      if (!std::isfinite(loss)) {
        throw TrainingError("non-finite training loss at epoch " +
                            std::to_string(epoch) +
                            "; the learning rate is probably too high (lr=" +
                            std::to_string(config.lr) + ")");
      }
      epoch_loss += loss;
      ++batches;
      Backward(model, caches, probs, yb, grad);

      // Running normalization statistics (unbiased batch variance).
      auto layers = model.mutable_layers();
      const double rows = static_cast<double>(xb.rows());
      const double unbias = rows > 1 ? rows / (rows - 1.0) : 1.0;
      for (std::size_t l = 0; l < layers.size(); ++l) {
        if (!layers[l].normalized) continue;
        const double mom = config.norm_momentum;
        layers[l].running_mean =
            mom * layers[l].running_mean + (1.0 - mom) * caches[l].batch_mean;
        layers[l].running_var = mom * layers[l].running_var +
                                (1.0 - mom) * unbias * caches[l].batch_var;
      }

      ++step;
      const double bc1 = 1.0 - std::pow(config.beta1, static_cast<double>(step));
      const double bc2 = 1.0 - std::pow(config.beta2, static_cast<double>(step));
      for (std::size_t b = 0; b < param_blocks.size(); ++b) {
        std::span<double> p = param_blocks[b];
        std::span<double> g = grad_blocks[b];
        std::span<double> m = m_blocks[b];
        std::span<double> v = v_blocks[b];
        for (std::size_t i = 0; i < p.size(); ++i) {
          const double gi = g[i] + config.weight_decay * p[i];
          m[i] = config.beta1 * m[i] + (1.0 - config.beta1) * gi;
          v[i] = config.beta2 * v[i] + (1.0 - config.beta2) * gi * gi;
          const double mhat = m[i] / bc1;
          const double vhat = v[i] / bc2;
          p[i] -= config.lr * mhat / (std::sqrt(vhat) + config.adam_eps);
        }
      }
      if (!model.AllFinite()) {
        throw TrainingError("non-finite parameters after step " +
                            std::to_string(step) + " (lr=" +
                            std::to_string(config.lr) + ")");
      }
    }
    local_log.train_loss.push_back(epoch_loss / static_cast<double>(batches));

    double acc = 0.0;
    if (!valid.empty()) {
      acc = Accuracy(Forward(model, valid_x, ForwardOptions{}, nullptr),
                     valid.labels);
    }
    local_log.valid_accuracy.push_back(acc);
    if (valid.empty() || acc > best_acc) {
      best_acc = acc;
      best_epoch = epoch;
      best = model;
    }
  }
  local_log.best_epoch = best_epoch;
  local_log.best_valid_accuracy = std::max(best_acc, 0.0);
  if (log) *log = std::move(local_log);
  return best;
}

GradCheckReport GradCheck(const BaseModel& model, const Matrix& features,
                          const LabeledNodes& rows, double step) {
  BaseModel analytic_grad;
  LossAndGradient(model, features, rows, &analytic_grad);
  GradCheckReport report;
  analytic_grad.ForEachParameter([&](std::span<const double> b) {
    report.analytic.insert(report.analytic.end(), b.begin(), b.end());
  });

  BaseModel probe = model;
  auto blocks = Blocks(probe);
  for (std::span<double> block : blocks) {
    for (double& p : block) {
      const double saved = p;
      p = saved + step;
      const double up = LossAndGradient(probe, features, rows, nullptr);
      p = saved - step;
      const double down = LossAndGradient(probe, features, rows, nullptr);
      p = saved;
      report.numeric.push_back((up - down) / (2.0 * step));
    }
  }
  for (std::size_t i = 0; i < report.analytic.size(); ++i) {
    const double a = report.analytic[i];
    const double f = report.numeric[i];
    const double denom = std::max({std::abs(a), std::abs(f), 1e-4});
    report.max_relative_error =
        std::max(report.max_relative_error, std::abs(a - f) / denom);
  }
  return report;
}

GradCheckReport GradCheck(const TrainConfig& config, const Matrix& features,
                          const LabeledNodes& rows, int num_classes,
                          double step) {
  BaseModel model = BaseModel::Initialize(static_cast<int>(features.cols()),
                                          num_classes, config);
  return GradCheck(model, features, rows, step);
}

}  // namespace csg
