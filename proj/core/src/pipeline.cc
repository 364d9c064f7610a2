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

#include "csg/pipeline.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "csg/errors.h"
#include "csg/metrics.h"
#include "csg/parallel.h"

#ifndef CSG_VERSION_STRING
#define CSG_VERSION_STRING "0.0.0"
#endif

namespace csg {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

double SecondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t Fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string Hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

double Nan() { return std::numeric_limits<double>::quiet_NaN(); }

json ConfigJson(const PipelineConfig& c) {
  json j;
  j["mode"] = ToString(c.mode);
  j["features"] = ToString(c.features);
  j["train"] = {{"model", ToString(c.train.kind)},
                {"layers", c.train.EffectiveLayers()},
                {"hidden", c.train.hidden},
                {"lr", c.train.lr},
                {"dropout", c.train.dropout},
                {"epochs", c.train.epochs},
                {"batch_size", c.train.batch_size},
                {"seed", c.train.seed},
                {"weight_decay", c.train.weight_decay},
                {"adam", {c.train.beta1, c.train.beta2, c.train.adam_eps}},
                {"norm_momentum", c.train.norm_momentum},
                {"norm_eps", c.train.norm_eps}};
  j["correction"] = {{"variant", ToString(c.correction.variant)},
                     {"alpha_correct", c.correction.alpha_correct},
                     {"scale", c.correction.scale},
                     {"epsilon_row", c.correction.epsilon_row},
                     {"max_iters", c.correction.stop.max_iters},
                     {"tol", c.correction.stop.tol}};
  j["smooth"] = {{"alpha_smooth", c.smooth.alpha_smooth},
                 {"labels", ToString(c.smooth.label_source)},
                 {"max_iters", c.smooth.stop.max_iters},
                 {"tol", c.smooth.stop.tol}};
  j["tune"] = c.tune;
  if (c.tune) {
    j["space"] = {{"alpha_correct", c.space.alpha_correct},
                  {"alpha_smooth", c.space.alpha_smooth},
                  {"scale", c.space.scale}};
  }
  if (c.features != FeatureMode::kRawOnly) {
    j["spectral"] = {{"k", c.spectral_k},
                     {"tau", c.tau ? json(*c.tau) : json("average_degree")},
                     {"seed", c.spectral_seed}};
  }
  return j;
}

}  // namespace

std::string VersionString() { return CSG_VERSION_STRING; }

std::string HardwareString() {
  std::string cpu = "unknown cpu";
  std::ifstream info("/proc/cpuinfo");
  std::string line;
  while (std::getline(info, line)) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) {
        cpu = line.substr(line.find_first_not_of(' ', colon + 1));
      }
      break;
    }
  }
  return cpu + "; " + std::to_string(std::thread::hardware_concurrency()) +
         " hw threads; " + std::to_string(NumThreads()) + " worker threads";
}

std::string PipelineConfig::ToJson() const { return ConfigJson(*this).dump(); }

std::uint64_t PipelineConfig::Hash() const { return Fnv1a(ToJson()); }

Matrix BuildFeatures(const Dataset& dataset, const PipelineConfig& config,
                     double* spectral_seconds) {
  if (config.features != FeatureMode::kSpectralOnly && !dataset.features) {
    throw ValidationError("dataset '" + dataset.name +
                          "' has no node features; use spectral features");
  }
  std::optional<SpectralEmbedding> embedding;
  if (config.features != FeatureMode::kRawOnly) {
    const auto t0 = Clock::now();
    RegularizedOperator op(dataset.graph, config.tau);
    EigenSolverOptions options;
    options.k = config.spectral_k;
    options.seed = config.spectral_seed;
    embedding = ComputeOrLoadEmbedding(op, options, config.cache_dir);
    if (spectral_seconds) *spectral_seconds = SecondsSince(t0);
  }
  return AugmentFeatures(dataset.features,
                         embedding ? &*embedding : nullptr, config.features);
}

PipelineReport RunFromPredictions(const Dataset& dataset, const Split& split,
                                  const Matrix& z,
                                  const PipelineConfig& config) {
  split.Validate(dataset.num_nodes());
  if (z.rows() != dataset.num_nodes() || z.cols() != dataset.num_classes) {
    throw ValidationError("prediction matrix is " + std::to_string(z.rows()) +
                          "x" + std::to_string(z.cols()) + ", expected " +
                          std::to_string(dataset.num_nodes()) + "x" +
                          std::to_string(dataset.num_classes));
  }
  const auto t0 = Clock::now();
  const LabeledNodes train = GatherLabels(dataset.labels, split.train);
  const LabeledNodes valid = GatherLabels(dataset.labels, split.valid);
  const GraphOperator sym(dataset.graph, OperatorKind::kSymNorm);
  const GraphOperator rw(dataset.graph, OperatorKind::kRowStochastic);

  PipelineReport report;
  report.config = config;
  if (config.tune && config.mode != PipelineMode::kBaseOnly) {
    GridResult grid = GridSearch(z, train, valid, sym, rw, config.correction,
                                 config.smooth, config.mode, config.space);
    report.config.correction = grid.correction;
    report.config.smooth = grid.smooth;
    report.tuned = grid.best;
  }
  PostProcessResult post =
      RunPostProcessing(z, train, valid, sym, rw, report.config.correction,
                        report.config.smooth, config.mode);

  report.dataset = dataset.name;
  report.config_hash = config.Hash();
  report.split_seed = split.seed;
  report.num_nodes = dataset.num_nodes();
  report.num_edges = dataset.graph->num_edges();
  report.num_classes = dataset.num_classes;
  report.num_components = dataset.graph->CountConnectedComponents();
  report.train_size = split.train.size();
  report.valid_size = split.valid.size();
  report.test_size = split.test.size();

  report.true_labels = dataset.labels;
  report.base_pred = std::move(post.base_labels);
  const bool corrected = config.mode == PipelineMode::kFull ||
                         config.mode == PipelineMode::kCorrectOnly;
  if (corrected) report.corrected_pred = std::move(post.corrected_labels);
  report.final_pred = std::move(post.final_labels);
  const std::size_t n = static_cast<std::size_t>(dataset.num_nodes());
  for (auto* v : {&report.base_pred, &report.corrected_pred}) {
    if (v->empty()) v->assign(n, kUnknownLabel);
  }

  report.base_accuracy = config.mode == PipelineMode::kLpOnly
                             ? Nan()
                             : Accuracy(report.base_pred, dataset.labels,
                                        split.test);
  report.corrected_accuracy =
      corrected ? Accuracy(report.corrected_pred, dataset.labels, split.test)
                : Nan();
  report.final_accuracy = Accuracy(report.final_pred, dataset.labels, split.test);
  report.valid_accuracy =
      Accuracy(report.final_pred, dataset.labels, split.valid);

  report.sigma = post.sigma;
  report.correct_iterations = post.correct_iterations;
  report.smooth_iterations = post.smooth_iterations;
  report.correct_converged = post.correct_converged;
  report.smooth_converged = post.smooth_converged;
  report.timings.correct = post.correct_seconds;
  report.timings.smooth = post.smooth_seconds;
  report.timings.total = SecondsSince(t0);
  report.hardware = HardwareString();
  report.version = VersionString();
  return report;
}

PipelineReport RunPipeline(const Dataset& dataset, const Split& split,
                           const Matrix& features,
                           const PipelineConfig& config) {
  const auto t0 = Clock::now();
  Matrix z;
  std::int64_t params = 0;
  int best_epoch = -1;
  double train_seconds = 0.0;
  if (config.mode == PipelineMode::kLpOnly) {
    z = Matrix::Zero(dataset.num_nodes(), dataset.num_classes);
  } else {
    split.Validate(dataset.num_nodes());
    const auto t_train = Clock::now();
    TrainingLog log;
    const BaseModel model =
        Train(features, GatherLabels(dataset.labels, split.train),
              GatherLabels(dataset.labels, split.valid), dataset.num_classes,
              config.train, &log);
    z = PredictProba(model, features);
    train_seconds = SecondsSince(t_train);
    params = model.CountParameters();
    best_epoch = log.best_epoch;
  }
  PipelineReport report = RunFromPredictions(dataset, split, z, config);
  report.parameter_count = params;
  report.best_epoch = best_epoch;
  report.timings.train = train_seconds;
  report.timings.total = SecondsSince(t0);
  return report;
}

PipelineReport RunPipeline(const Dataset& dataset, const Split& split,
                           const PipelineConfig& config) {
  const auto t0 = Clock::now();
  double spectral_seconds = 0.0;
  Matrix features;
  if (config.mode != PipelineMode::kLpOnly) {
    features = BuildFeatures(dataset, config, &spectral_seconds);
  }
  PipelineReport report = RunPipeline(dataset, split, features, config);
  report.timings.spectral = spectral_seconds;
  report.timings.total = SecondsSince(t0);
  return report;
}

std::string PipelineReport::ToJson() const {
  json j;
  j["dataset"] = dataset;
  j["version"] = version;
  j["hardware"] = hardware;
  j["config_hash"] = Hex(config_hash);
  j["config"] = ConfigJson(config);
  j["graph"] = {{"nodes", num_nodes},
                {"edges", num_edges},
                {"classes", num_classes},
                {"components", num_components}};
  j["split"] = {{"seed", split_seed},
                {"train", train_size},
                {"valid", valid_size},
                {"test", test_size}};
  auto acc = [](double v) { return std::isnan(v) ? json(nullptr) : json(v); };
  j["accuracy"] = {{"base", acc(base_accuracy)},
                   {"corrected", acc(corrected_accuracy)},
                   {"final", acc(final_accuracy)},
                   {"valid_final", acc(valid_accuracy)}};
  if (tuned) {
    j["tuned"] = {{"alpha_correct", tuned->alpha_correct},
                  {"alpha_smooth", tuned->alpha_smooth},
                  {"scale", tuned->scale},
                  {"valid_accuracy", tuned->valid_accuracy}};
  }
  auto mu = [](double alpha) {
    return alpha > 0.0 ? json(1.0 / alpha - 1.0) : json(nullptr);
  };
  j["propagation"] = {
      {"correct_iterations", correct_iterations},
      {"correct_converged", correct_converged},
      {"smooth_iterations", smooth_iterations},
      {"smooth_converged", smooth_converged},
      {"sigma", sigma},
      {"mu_correct", mu(config.correction.alpha_correct)},
      {"mu_smooth", mu(config.smooth.alpha_smooth)}};
  j["model"] = {{"parameters", parameter_count}, {"best_epoch", best_epoch}};
  j["timings_seconds"] = {{"spectral", timings.spectral},
                          {"train", timings.train},
                          {"correct", timings.correct},
                          {"smooth", timings.smooth},
                          {"total", timings.total}};
  return j.dump(2);
}

void PipelineReport::WritePerNodeCsv(std::ostream& out) const {
  out << "node,true_label,base_pred,corrected_pred,final_pred\n";
  for (std::size_t i = 0; i < final_pred.size(); ++i) {
    out << i << ',' << true_labels[i] << ',' << base_pred[i] << ','
        << corrected_pred[i] << ',' << final_pred[i] << '\n';
  }
}

}  // namespace csg
