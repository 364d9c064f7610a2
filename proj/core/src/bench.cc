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

#include "csg/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "csg/errors.h"
#include "csg/metrics.h"

namespace csg {
namespace {

using Clock = std::chrono::steady_clock;

struct RowKey {
  BenchBase base;
  FeatureMode features;
  CorrectionVariant variant;
  LabelSource labels;
  PipelineMode mode;

  auto Tie() const { return std::tie(base, features, variant, labels, mode); }
  bool operator==(const RowKey& o) const { return Tie() == o.Tie(); }
};

struct SeedResult {
  RowKey key;
  double final_accuracy = 0.0;
  double base_accuracy = 0.0;
  double valid_accuracy = 0.0;
  double train_seconds = 0.0;
  double post_seconds = 0.0;
  std::int64_t parameters = 0;
  std::uint64_t config_hash = 0;
};

struct PreparedDataset {
  std::filesystem::path dir;
  Dataset data;
  DatasetPreset preset;
  Matrix raw;        // standardized raw features (empty if none)
  Matrix augmented;  // raw + spectral, or spectral only
  FeatureMode augmented_mode = FeatureMode::kConcat;
};

bool NeedsSpectral(const BenchOptions& o) {
  return std::any_of(o.bases.begin(), o.bases.end(), [](BenchBase b) {
    return b == BenchBase::kLinear || b == BenchBase::kMlp;
  });
}

bool NeedsRaw(const BenchOptions& o) {
  return std::find(o.bases.begin(), o.bases.end(), BenchBase::kPlainLinear) !=
         o.bases.end();
}

PreparedDataset Prepare(const BenchOptions& options, const std::string& name) {
  PreparedDataset p;
  p.dir = options.data_dir / name;
  p.data = LoadDataset(p.dir);
  p.preset = PresetOrDefault(name);
  const bool has_raw = p.data.features.has_value() && p.preset.has_raw_features;
  if (has_raw && NeedsRaw(options)) {
    p.raw = AugmentFeatures(p.data.features, nullptr, FeatureMode::kRawOnly);
  }
  if (NeedsSpectral(options)) {
    PipelineConfig config;
    config.features = has_raw ? FeatureMode::kConcat : FeatureMode::kSpectralOnly;
    config.spectral_k = options.spectral_k;
    config.cache_dir = options.cache_dir;
    p.augmented_mode = config.features;
    p.augmented = BuildFeatures(p.data, config);
  }
  return p;
}

PipelineReport TimedPost(const Dataset& data, const Split& split,
                         const Matrix& z, const PipelineConfig& config,
                         int reps, double* median_seconds) {
  std::vector<double> times;
  PipelineReport report;
  for (int r = 0; r < std::max(reps, 1); ++r) {
    report = RunFromPredictions(data, split, z, config);
    times.push_back(report.timings.total);
  }
  *median_seconds = Median(times);
  return report;
}

std::vector<SeedResult> RunCell(const BenchOptions& options,
                                const PreparedDataset& prepared,
                                std::uint64_t seed) {
  const Dataset& data = prepared.data;
  const Split split =
      SplitForSeed(data, prepared.dir, prepared.preset, seed);
  std::vector<SeedResult> out;

  auto record = [&](const RowKey& key, const PipelineReport& report,
                    double train_seconds, double post_seconds) {
    SeedResult r;
    r.key = key;
    r.final_accuracy = report.final_accuracy;
    r.base_accuracy = report.base_accuracy;
    r.valid_accuracy = report.valid_accuracy;
    r.train_seconds = train_seconds;
    r.post_seconds = post_seconds;
    r.parameters = report.parameter_count;
    r.config_hash = report.config_hash;
    out.push_back(r);
  };

  for (BenchBase base : options.bases) {
    PipelineConfig config;
    config.tune = options.tune;
    config.spectral_k = options.spectral_k;
    if (base == BenchBase::kLabelPropagation) {
      config.mode = PipelineMode::kLpOnly;
      config.correction.variant = CorrectionVariant::kNone;
      const Matrix zeros = Matrix::Zero(data.num_nodes(), data.num_classes);
      for (LabelSource source : options.sources) {
        config.smooth.label_source = source;
        double post = 0.0;
        PipelineReport report = TimedPost(data, split, zeros, config,
                                          options.timing_repetitions, &post);
        record({base, FeatureMode::kRawOnly, CorrectionVariant::kNone, source,
                PipelineMode::kLpOnly},
               report, 0.0, post);
      }
      continue;
    }

    const bool plain = base == BenchBase::kPlainLinear;
    if (plain && prepared.raw.size() == 0) continue;  // no raw features
    const Matrix& features = plain ? prepared.raw : prepared.augmented;
    config.features = plain ? FeatureMode::kRawOnly : prepared.augmented_mode;
    config.train = MakeTrainConfig(
        prepared.preset,
        base == BenchBase::kMlp ? ModelKind::kMlp : ModelKind::kLinear, seed);
    config.train.epochs = options.epochs;

    const auto t0 = Clock::now();
    TrainingLog log;
    const BaseModel model =
        Train(features, GatherLabels(data.labels, split.train),
              GatherLabels(data.labels, split.valid), data.num_classes,
              config.train, &log);
    const Matrix z = PredictProba(model, features);
    const double train_seconds =
        std::chrono::duration<double>(Clock::now() - t0).count();

    auto run = [&](PipelineConfig c, const RowKey& key) {
      double post = 0.0;
      PipelineReport report = TimedPost(data, split, z, c,
                                        options.timing_repetitions, &post);
      report.parameter_count = model.CountParameters();
      record(key, report, train_seconds, post);
    };

    if (options.stage_rows) {
      PipelineConfig c = config;
      c.mode = PipelineMode::kBaseOnly;
      c.correction.variant = CorrectionVariant::kNone;
      run(c, {base, config.features, CorrectionVariant::kNone,
              LabelSource::kTrainOnly, PipelineMode::kBaseOnly});
    }
    for (CorrectionVariant variant : options.variants) {
      PipelineConfig c = config;
      c.correction.variant = variant;
      if (options.stage_rows) {
        c.mode = PipelineMode::kCorrectOnly;
        run(c, {base, config.features, variant, LabelSource::kTrainOnly,
                PipelineMode::kCorrectOnly});
      }
      c.mode = PipelineMode::kFull;
      for (LabelSource source : options.sources) {
        c.smooth.label_source = source;
        run(c, {base, config.features, variant, source, PipelineMode::kFull});
      }
    }
  }
  return out;
}

}  // namespace

const char* ToString(BenchBase base) {
  switch (base) {
    case BenchBase::kLabelPropagation:
      return "lp";
    case BenchBase::kPlainLinear:
      return "plain_linear";
    case BenchBase::kLinear:
      return "linear";
    case BenchBase::kMlp:
      return "mlp";
  }
  return "?";
}

BenchBase ParseBenchBase(const std::string& text) {
  if (text == "lp") return BenchBase::kLabelPropagation;
  if (text == "plain_linear" || text == "plain-linear") {
    return BenchBase::kPlainLinear;
  }
  if (text == "linear") return BenchBase::kLinear;
  if (text == "mlp") return BenchBase::kMlp;
  throw ValidationError("unknown base model '" + text + "'");
}

double BenchRow::MeanAccuracy() const { return Mean(final_accuracy); }
double BenchRow::StdAccuracy() const { return StdDev(final_accuracy); }

Split SplitForSeed(const Dataset& dataset, const std::filesystem::path& dir,
                   const DatasetPreset& preset, std::uint64_t seed) {
  const std::filesystem::path fixed = dir / "split.txt";
  if (preset.split_policy == SplitPolicy::kFixed) {
    if (!std::filesystem::exists(fixed)) {
      throw ValidationError("dataset '" + dataset.name +
                            "' uses a fixed split but " + fixed.string() +
                            " is missing");
    }
    Split split = LoadSplit(fixed, dataset.num_nodes());
    split.seed = seed;
    return split;
  }
  return MakeSplit(dataset, preset.fractions, seed);
}

std::vector<BenchRow> RunBench(const BenchOptions& options,
                               const BenchProgress& progress) {
  if (options.seeds < 1) throw ValidationError("need at least one seed");
  if (options.jobs < 1) throw ValidationError("jobs must be positive");
  std::vector<PreparedDataset> prepared;
  for (const std::string& name : options.datasets) {
    if (progress) progress("preparing " + name);
    prepared.push_back(Prepare(options, name));
  }

  const std::size_t cells = prepared.size() * static_cast<std::size_t>(options.seeds);
  std::vector<std::vector<SeedResult>> results(cells);
  std::vector<std::exception_ptr> errors(cells);
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t cell = next++; cell < cells; cell = next++) {
      const std::size_t d = cell / static_cast<std::size_t>(options.seeds);
      const std::uint64_t seed =
          options.first_seed + cell % static_cast<std::size_t>(options.seeds);
      try {
        results[cell] = RunCell(options, prepared[d], seed);
      } catch (...) {
        errors[cell] = std::current_exception();
      }
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        progress(prepared[d].data.name + " seed " + std::to_string(seed) +
                 " done");
      }
    }
  };
  std::vector<std::thread> pool;
  const int jobs = std::min<int>(options.jobs, static_cast<int>(cells));
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<BenchRow> rows;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const std::size_t d = cell / static_cast<std::size_t>(options.seeds);
    const std::uint64_t seed =
        options.first_seed + cell % static_cast<std::size_t>(options.seeds);
    for (const SeedResult& r : results[cell]) {
      auto it = std::find_if(rows.begin(), rows.end(), [&](const BenchRow& row) {
        return row.dataset == prepared[d].data.name &&
               RowKey{row.base, row.features, row.variant, row.labels,
                      row.mode} == r.key;
      });
      if (it == rows.end()) {
        BenchRow row;
        row.dataset = prepared[d].data.name;
        row.base = r.key.base;
        row.features = r.key.features;
        row.variant = r.key.variant;
        row.labels = r.key.labels;
        row.mode = r.key.mode;
        row.parameters = r.parameters;
        row.config_hash = r.config_hash;
        rows.push_back(row);
        it = rows.end() - 1;
      }
      it->seeds.push_back(seed);
      it->final_accuracy.push_back(r.final_accuracy);
      it->base_accuracy.push_back(r.base_accuracy);
      it->valid_accuracy.push_back(r.valid_accuracy);
      it->train_seconds.push_back(r.train_seconds);
      it->post_seconds.push_back(r.post_seconds);
      it->total_seconds.push_back(r.train_seconds + r.post_seconds);
    }
  }
  return rows;
}

void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "dataset,base,features,variant,labels,mode,seeds,mean_acc,std_acc,"
         "mean_base_acc,mean_valid_acc,median_train_s,median_post_s,"
         "parameters,config_hash,per_seed_acc\n";
  char buf[64];
  auto pct = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * v);
    return std::string(buf);
  };
  auto secs = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return std::string(buf);
  };
  for (const BenchRow& row : rows) {
    std::string per_seed;
    for (std::size_t i = 0; i < row.final_accuracy.size(); ++i) {
      if (i) per_seed += ';';
      per_seed += pct(row.final_accuracy[i]);
    }
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(row.config_hash));
    const std::string hash = buf;
    const bool has_base = row.mode != PipelineMode::kLpOnly;
    out << row.dataset << ',' << ToString(row.base) << ','
        << ToString(row.features) << ',' << ToString(row.variant) << ','
        << ToString(row.labels) << ',' << ToString(row.mode) << ','
        << row.seeds.size() << ',' << pct(row.MeanAccuracy()) << ','
        << pct(row.StdAccuracy()) << ','
        << (has_base ? pct(Mean(row.base_accuracy)) : std::string()) << ','
        << pct(Mean(row.valid_accuracy)) << ','
        << secs(Median(row.train_seconds)) << ','
        << secs(Median(row.post_seconds)) << ',' << row.parameters << ','
        << hash << ',' << per_seed << '\n';
  }
}

}  // namespace csg
