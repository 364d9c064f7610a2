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

// csgraph: command-line front end for the correct-and-smooth pipeline.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csg/bench.h"
#include "csg/correct_smooth.h"
#include "csg/dataset.h"
#include "csg/errors.h"
#include "csg/matrix_io.h"
#include "csg/metrics.h"
#include "csg/parallel.h"
#include "csg/pipeline.h"
#include "csg/presets.h"
#include "csg/spectral.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitConvergence = 3;

using csg::Dataset;
using csg::Matrix;
using csg::PipelineConfig;
using csg::Split;

struct CommonArgs {
  std::string data;
  std::string split;
  std::string cache;
  int k = 128;
  std::optional<double> tau;
  std::uint64_t spectral_seed = 0;
};

void AddDataArgs(CLI::App* cmd, CommonArgs& a, bool need_split) {
  cmd->add_option("--data", a.data, "Dataset directory")->required();
  auto* split = cmd->add_option("--split", a.split, "Split file");
  if (need_split) split->required();
}

void AddSpectralArgs(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--k", a.k, "Spectral embedding dimension")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tau", a.tau, "Regularizer (default: average degree)");
  cmd->add_option("--spectral-seed", a.spectral_seed, "Eigensolver seed");
  cmd->add_option("--cache", a.cache, "Spectral embedding cache directory");
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw csg::ValidationError("cannot write " + path);
  out << text;
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

// --- prep -----------------------------------------------------------------

struct PrepArgs {
  CommonArgs common;
  std::string out;
};

int RunPrep(const PrepArgs& a) {
  const Dataset ds = csg::LoadDataset(a.common.data);
  std::printf("dataset %s: %d nodes, %lld edges, %d classes, %d components, "
              "%zu labeled, features %s\n",
              ds.name.c_str(), ds.num_nodes(),
              static_cast<long long>(ds.graph->num_edges()), ds.num_classes,
              ds.graph->CountConnectedComponents(), ds.LabeledNodeIds().size(),
              ds.features ? (std::to_string(ds.features->cols()) + " columns").c_str()
                          : "none");
  csg::RegularizedOperator op(ds.graph, a.common.tau);
  csg::EigenSolverOptions options;
  options.k = a.common.k;
  options.seed = a.common.spectral_seed;
  const csg::SpectralEmbedding emb =
      csg::ComputeOrLoadEmbedding(op, options, a.common.cache);
  std::printf("spectral embedding: k=%d tau=%.6g top eigenvalue %.6f\n",
              emb.k(), op.tau(), emb.values(0));
  if (!a.out.empty()) csg::WriteMatrix(a.out, emb.vectors);
  return 0;
}

// --- split ----------------------------------------------------------------

struct SplitArgs {
  std::string data;
  std::string out;
  std::vector<double> fractions;
  std::uint64_t seed = 0;
};

int RunSplit(const SplitArgs& a) {
  const Dataset ds = csg::LoadDataset(a.data);
  csg::SplitFractions f = csg::PresetOrDefault(ds.name).fractions;
  if (!a.fractions.empty()) {
    if (a.fractions.size() != 3) {
      throw csg::ValidationError("--fractions takes three values");
    }
    f = {a.fractions[0], a.fractions[1], a.fractions[2]};
  }
  const Split split = csg::MakeSplit(ds, f, a.seed);
  if (a.out.empty()) {
    csg::WriteSplit(std::cout, split);
  } else {
    csg::WriteSplit(std::filesystem::path(a.out), split);
  }
  std::fprintf(stderr, "split sizes: train %zu, valid %zu, test %zu\n",
               split.train.size(), split.valid.size(), split.test.size());
  return 0;
}

// --- train ----------------------------------------------------------------

struct TrainArgs {
  CommonArgs common;
  std::string model = "linear";
  std::string features = "raw";
  std::optional<int> layers;
  std::optional<int> hidden;
  std::optional<double> lr;
  double dropout = 0.5;
  int epochs = 300;
  int batch_size = 0;
  std::uint64_t seed = 0;
  double weight_decay = 0.0;
  std::string checkpoint;
  std::string out;
};

csg::TrainConfig MakeTrainConfig(const TrainArgs& a, const std::string& name) {
  csg::TrainConfig c = csg::MakeTrainConfig(
      csg::PresetOrDefault(name), csg::ParseModelKind(a.model), a.seed);
  if (a.layers) c.layers = *a.layers;
  if (a.hidden) c.hidden = *a.hidden;
  if (a.lr) c.lr = *a.lr;
  c.dropout = a.dropout;
  c.epochs = a.epochs;
  c.batch_size = a.batch_size;
  c.weight_decay = a.weight_decay;
  return c;
}

PipelineConfig FeatureConfig(const CommonArgs& common,
                             const std::string& features) {
  PipelineConfig c;
  c.features = csg::ParseFeatureMode(features);
  c.spectral_k = common.k;
  c.tau = common.tau;
  c.spectral_seed = common.spectral_seed;
  c.cache_dir = common.cache;
  return c;
}

int RunTrain(const TrainArgs& a) {
  const Dataset ds = csg::LoadDataset(a.common.data);
  const Split split = csg::LoadSplit(a.common.split, ds.num_nodes());
  const PipelineConfig fc = FeatureConfig(a.common, a.features);
  const Matrix x = csg::BuildFeatures(ds, fc);
  const csg::TrainConfig tc = MakeTrainConfig(a, ds.name);
  csg::TrainingLog log;
  const csg::BaseModel model =
      csg::Train(x, csg::GatherLabels(ds.labels, split.train),
                 csg::GatherLabels(ds.labels, split.valid), ds.num_classes, tc,
                 &log);
  const Matrix z = csg::PredictProba(model, x);
  std::printf("%s on %s features: %lld parameters, best epoch %d, valid "
              "accuracy %.2f%%\n",
              csg::ToString(tc.kind), csg::ToString(fc.features),
              static_cast<long long>(model.CountParameters()), log.best_epoch,
              100.0 * log.best_valid_accuracy);
  if (!a.checkpoint.empty()) model.Save(a.checkpoint);
  if (!a.out.empty()) csg::WriteMatrix(a.out, z);
  return 0;
}

// --- cas / run ------------------------------------------------------------

struct CasArgs {
  CommonArgs common;
  std::string predictions;
  std::string variant = "autoscale";
  std::optional<double> alpha_correct;
  std::optional<double> alpha_smooth;
  std::optional<double> scale;
  std::string labels = "train";
  std::string mode = "full";
  bool tune = false;
  int max_iters = 100;
  double tol = 1e-6;
  bool require_convergence = false;
  std::string report;
  std::string per_node;
};

void ApplyCasArgs(const CasArgs& a, PipelineConfig& c) {
  c.mode = csg::ParsePipelineMode(a.mode);
  c.correction.variant = csg::ParseCorrectionVariant(a.variant);
  c.smooth.label_source = csg::ParseLabelSource(a.labels);
  // Explicit values pin that grid axis.
  c.tune = a.tune;
  if (a.alpha_correct) {
    c.correction.alpha_correct = *a.alpha_correct;
    c.space.alpha_correct = {*a.alpha_correct};
  }
  if (a.alpha_smooth) {
    c.smooth.alpha_smooth = *a.alpha_smooth;
    c.space.alpha_smooth = {*a.alpha_smooth};
  }
  if (a.scale) {
    c.correction.scale = *a.scale;
    c.space.scale = {*a.scale};
  }
  c.correction.stop = {a.max_iters, a.tol};
  c.smooth.stop = {a.max_iters, a.tol};
}

int FinishReport(const CasArgs& a, const csg::PipelineReport& r) {
  auto pct = [](double v) { return 100.0 * v; };
  std::printf("%s %s: base %.2f%%  corrected %.2f%%  final %.2f%%  (valid "
              "%.2f%%)\n",
              r.dataset.c_str(), csg::ToString(r.config.mode),
              pct(r.base_accuracy), pct(r.corrected_accuracy),
              pct(r.final_accuracy), pct(r.valid_accuracy));
  if (r.tuned) {
    std::printf("tuned: alpha_correct %.2f alpha_smooth %.2f s %.2f\n",
                r.tuned->alpha_correct, r.tuned->alpha_smooth, r.tuned->scale);
  }
  if (!a.report.empty()) WriteText(a.report, r.ToJson() + "\n");
  if (!a.per_node.empty()) {
    std::ofstream out(a.per_node);
    if (!out) throw csg::ValidationError("cannot write " + a.per_node);
    r.WritePerNodeCsv(out);
  }
  if (!r.correct_converged || !r.smooth_converged) {
    std::fprintf(stderr,
                 "warning: propagation stopped at the iteration cap (correct "
                 "%d, smooth %d iterations)\n",
                 r.correct_iterations, r.smooth_iterations);
    if (a.require_convergence) return kExitConvergence;
  }
  return 0;
}

int RunCas(const CasArgs& a) {
  const Dataset ds = csg::LoadDataset(a.common.data);
  const Split split = csg::LoadSplit(a.common.split, ds.num_nodes());
  PipelineConfig c;
  ApplyCasArgs(a, c);
  Matrix z;
  if (c.mode == csg::PipelineMode::kLpOnly && a.predictions.empty()) {
    z = Matrix::Zero(ds.num_nodes(), ds.num_classes);
  } else {
    if (a.predictions.empty()) {
      throw csg::ValidationError("--predictions is required for mode " +
                                 a.mode);
    }
    z = csg::ReadMatrix(a.predictions);
  }
  return FinishReport(a, csg::RunFromPredictions(ds, split, z, c));
}

struct RunArgs {
  TrainArgs train;
  CasArgs cas;
};

int RunRun(RunArgs& a) {
  const Dataset ds = csg::LoadDataset(a.train.common.data);
  const Split split = csg::LoadSplit(a.train.common.split, ds.num_nodes());
  PipelineConfig c = FeatureConfig(a.train.common, a.train.features);
  c.train = MakeTrainConfig(a.train, ds.name);
  ApplyCasArgs(a.cas, c);
  return FinishReport(a.cas, csg::RunPipeline(ds, split, c));
}

// --- bench ----------------------------------------------------------------

struct BenchArgs {
  std::string data_dir;
  std::string datasets;
  std::string bases = "lp,plain_linear,linear,mlp";
  int seeds = 5;
  std::uint64_t first_seed = 0;
  int jobs = 1;
  int reps = 3;
  int epochs = 300;
  int k = 128;
  std::string cache;
  bool no_tune = false;
  std::string out;
};

int RunBenchCmd(const BenchArgs& a) {
  csg::BenchOptions o;
  o.data_dir = a.data_dir;
  o.datasets = SplitCommas(a.datasets);
  o.bases.clear();
  for (const std::string& b : SplitCommas(a.bases)) {
    o.bases.push_back(csg::ParseBenchBase(b));
  }
  o.seeds = a.seeds;
  o.first_seed = a.first_seed;
  o.jobs = a.jobs;
  o.timing_repetitions = a.reps;
  o.epochs = a.epochs;
  o.spectral_k = a.k;
  o.cache_dir = a.cache;
  o.tune = !a.no_tune;
  const auto rows = csg::RunBench(o, [](const std::string& msg) {
    std::fprintf(stderr, "[bench] %s\n", msg.c_str());
  });
  if (a.out.empty()) {
    csg::WriteBenchCsv(std::cout, rows);
  } else {
    std::ofstream out(a.out);
    if (!out) throw csg::ValidationError("cannot write " + a.out);
    csg::WriteBenchCsv(out, rows);
  }
  return 0;
}

// --- eval -----------------------------------------------------------------

struct EvalArgs {
  CommonArgs common;
  std::string predictions;
  std::string column = "final_pred";
  std::string subset = "test";
};

// Predicted labels from a per-node CSV (named column) or a score matrix
// (row argmax).
std::vector<int> ReadPredictions(const std::string& path,
                                 const std::string& column, int n) {
  std::ifstream in(path);
  if (!in) throw csg::ValidationError("cannot open " + path);
  std::string header;
  std::getline(in, header);
  const auto names = SplitCommas(header);
  int node_col = -1;
  int pred_col = -1;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (names[i] == "node") node_col = i;
    if (names[i] == column) pred_col = i;
  }
  if (node_col < 0 || pred_col < 0) {
    return csg::ArgmaxRows(csg::ReadMatrix(path));
  }
  std::vector<int> pred(static_cast<std::size_t>(n), csg::kUnknownLabel);
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = SplitCommas(line);
    try {
      const int node = std::stoi(cells.at(node_col));
      if (node < 0 || node >= n) throw std::out_of_range("node");
      pred[node] = std::stoi(cells.at(pred_col));
    } catch (const std::exception&) {
      throw csg::ValidationError(path + ":" + std::to_string(line_no) +
                                 ": malformed prediction row");
    }
  }
  return pred;
}

int RunEval(const EvalArgs& a) {
  const Dataset ds = csg::LoadDataset(a.common.data);
  const Split split = csg::LoadSplit(a.common.split, ds.num_nodes());
  const std::vector<int> pred =
      ReadPredictions(a.predictions, a.column, ds.num_nodes());
  if (static_cast<int>(pred.size()) != ds.num_nodes()) {
    throw csg::ValidationError("prediction file covers " +
                               std::to_string(pred.size()) + " nodes, dataset has " +
                               std::to_string(ds.num_nodes()));
  }
  const std::vector<csg::NodeId>& index = a.subset == "train"   ? split.train
                                          : a.subset == "valid" ? split.valid
                                                                : split.test;
  const double acc = csg::Accuracy(pred, ds.labels, index);
  std::printf("%s accuracy on %s (%zu nodes): %.4f\n", a.column.c_str(),
              a.subset.c_str(), index.size(), acc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"csgraph: transductive node classification with correct and "
               "smooth post-processing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", csg::VersionString());
  bool strict = false;
  app.add_flag("--strict-deterministic", strict,
               "Single-threaded dense kernels for bitwise-reproducible runs");

  PrepArgs prep;
  auto* prep_cmd = app.add_subcommand("prep", "Validate a dataset and build its spectral cache");
  AddDataArgs(prep_cmd, prep.common, false);
  AddSpectralArgs(prep_cmd, prep.common);
  prep_cmd->add_option("--out", prep.out, "Also write the embedding matrix");

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "Generate a random split file");
  split_cmd->add_option("--data", split.data, "Dataset directory")->required();
  split_cmd->add_option("--fractions", split.fractions,
                        "train valid test fractions (default: dataset preset)")
      ->expected(3)
      ->delimiter(',');
  split_cmd->add_option("--seed", split.seed, "Split seed");
  split_cmd->add_option("--out", split.out, "Output file (default stdout)");

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train a base predictor and write Z");
  auto add_train_options = [](CLI::App* cmd, TrainArgs& t) {
    AddDataArgs(cmd, t.common, true);
    AddSpectralArgs(cmd, t.common);
    cmd->add_option("--model", t.model, "linear | mlp")
        ->check(CLI::IsMember({"linear", "mlp"}));
    cmd->add_option("--features", t.features, "raw | spectral | concat")
        ->check(CLI::IsMember({"raw", "spectral", "concat"}));
    cmd->add_option("--layers", t.layers, "Linear layers in the MLP");
    cmd->add_option("--hidden", t.hidden, "Hidden width");
    cmd->add_option("--lr", t.lr, "Adam learning rate");
    cmd->add_option("--dropout", t.dropout, "Dropout probability");
    cmd->add_option("--epochs", t.epochs, "Training epochs");
    cmd->add_option("--batch-size", t.batch_size, "0 = full batch");
    cmd->add_option("--seed", t.seed, "Initialization and dropout seed");
    cmd->add_option("--weight-decay", t.weight_decay, "L2 penalty");
    cmd->add_option("--checkpoint", t.checkpoint, "Write the trained model");
  };
  add_train_options(train_cmd, train);
  train_cmd->add_option("--out", train.out, "Write Z (csv or .bin)");

  auto add_cas_options = [](CLI::App* cmd, CasArgs& c) {
    cmd->add_option("--variant", c.variant, "autoscale | fdiff | none")
        ->check(CLI::IsMember({"autoscale", "fdiff", "none"}));
    cmd->add_option("--alpha-correct", c.alpha_correct, "Correct-stage alpha");
    cmd->add_option("--alpha-smooth", c.alpha_smooth, "Smooth-stage alpha");
    cmd->add_option("--scale-s", c.scale, "FDiff-scale factor s");
    cmd->add_option("--labels", c.labels, "train | train+val")
        ->check(CLI::IsMember({"train", "train+val"}));
    cmd->add_option("--mode", c.mode,
                    "full | correct-only | basic | lp-only | base-only")
        ->check(CLI::IsMember(
            {"full", "correct-only", "basic", "lp-only", "base-only"}));
    cmd->add_flag("--tune", c.tune,
                  "Grid-search unset alphas and s on the validation set");
    cmd->add_option("--max-iters", c.max_iters, "Propagation iteration cap");
    cmd->add_option("--tol", c.tol, "Propagation tolerance (max abs change)");
    cmd->add_flag("--require-convergence", c.require_convergence,
                  "Exit 3 if propagation hits the iteration cap");
    cmd->add_option("--report", c.report, "Write the JSON run report");
    cmd->add_option("--per-node", c.per_node, "Write per-node predictions CSV");
  };

  CasArgs cas;
  auto* cas_cmd = app.add_subcommand("cas", "Correct and smooth base predictions");
  AddDataArgs(cas_cmd, cas.common, true);
  cas_cmd->add_option("--predictions", cas.predictions, "Base predictions Z");
  add_cas_options(cas_cmd, cas);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Train a base predictor, then correct and smooth");
  add_train_options(run_cmd, run.train);
  add_cas_options(run_cmd, run.cas);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Accuracy summary over datasets, models and variants");
  bench_cmd->add_option("--data-dir", bench.data_dir, "Directory of datasets")
      ->required();
  bench_cmd->add_option("--datasets", bench.datasets, "Comma-separated names")
      ->required();
  bench_cmd->add_option("--bases", bench.bases,
                        "Comma-separated: lp, plain_linear, linear, mlp");
  bench_cmd->add_option("--seeds", bench.seeds, "Split seeds per dataset");
  bench_cmd->add_option("--first-seed", bench.first_seed, "First seed");
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--reps", bench.reps, "Timing repetitions");
  bench_cmd->add_option("--epochs", bench.epochs, "Training epochs");
  bench_cmd->add_option("--k", bench.k, "Spectral embedding dimension");
  bench_cmd->add_option("--cache", bench.cache, "Spectral cache directory");
  bench_cmd->add_flag("--no-tune", bench.no_tune, "Use default alphas and s");
  bench_cmd->add_option("--out", bench.out, "CSV output (default stdout)");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Accuracy of a prediction file");
  AddDataArgs(eval_cmd, eval.common, true);
  eval_cmd->add_option("--predictions", eval.predictions,
                       "Per-node CSV or score matrix")
      ->required();
  eval_cmd->add_option("--column", eval.column, "Per-node CSV column");
  eval_cmd->add_option("--subset", eval.subset, "train | valid | test")
      ->check(CLI::IsMember({"train", "valid", "test"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    csg::SetStrictDeterministic(strict);
    if (*prep_cmd) return RunPrep(prep);
    if (*split_cmd) return RunSplit(split);
    if (*train_cmd) return RunTrain(train);
    if (*cas_cmd) return RunCas(cas);
    if (*run_cmd) return RunRun(run);
    if (*bench_cmd) return RunBenchCmd(bench);
    if (*eval_cmd) return RunEval(eval);
  } catch (const csg::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const csg::ConvergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
