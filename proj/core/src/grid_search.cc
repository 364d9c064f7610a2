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

#include "csg/grid_search.h"

#include <algorithm>
#include <string>
#include <tuple>

#include "csg/errors.h"

namespace csg {
namespace {

std::vector<double> Sorted(std::vector<double> v, const char* name) {
  if (v.empty()) {
    throw ValidationError(std::string("search space for ") + name +
                          " is empty");
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

double ValidAccuracy(const std::vector<int>& predicted,
                     const LabeledNodes& valid) {
  std::size_t hits = 0;
  for (std::size_t r = 0; r < valid.size(); ++r) {
    hits += predicted[valid.nodes[r]] == valid.labels[r];
  }
  return static_cast<double>(hits) / static_cast<double>(valid.size());
}

}  // namespace

SearchSpace SearchSpace::Default() {
  const std::vector<double> alphas = {0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
  return SearchSpace{alphas, alphas, {0.5, 0.75, 1.0, 1.5, 2.0}};
}

SearchSpace SearchSpace::Singleton(const CorrectionConfig& correction,
                                   const SmoothConfig& smooth) {
  return SearchSpace{{correction.alpha_correct},
                     {smooth.alpha_smooth},
                     {correction.scale}};
}

GridResult GridSearch(const Matrix& z, const LabeledNodes& train,
                      const LabeledNodes& valid, const GraphOperator& sym,
                      const GraphOperator& row_stochastic,
                      const CorrectionConfig& correction,
                      const SmoothConfig& smooth, PipelineMode mode,
                      const SearchSpace& space) {
  if (valid.empty()) throw ValidationError("grid search needs validation rows");
  const bool corrects = (mode == PipelineMode::kFull ||
                         mode == PipelineMode::kCorrectOnly) &&
                        correction.variant != CorrectionVariant::kNone;
  const bool smooths = mode == PipelineMode::kFull ||
                       mode == PipelineMode::kBasic ||
                       mode == PipelineMode::kLpOnly;
  const bool autoscale =
      corrects && correction.variant == CorrectionVariant::kAutoscale;
  const bool fdiff =
      corrects && correction.variant == CorrectionVariant::kFDiffScale;

  const std::vector<double> alpha_c =
      autoscale ? Sorted(space.alpha_correct, "alpha_correct")
                : std::vector<double>{correction.alpha_correct};
  const std::vector<double> alpha_s =
      smooths ? Sorted(space.alpha_smooth, "alpha_smooth")
              : std::vector<double>{smooth.alpha_smooth};
  const std::vector<double> scales =
      fdiff ? Sorted(space.scale, "scale")
            : std::vector<double>{correction.scale};

  SmoothConfig search_smooth = smooth;
  search_smooth.label_source = LabelSource::kTrainOnly;

  GridResult result;
  for (double ac : alpha_c) {
    CorrectionConfig c = correction;
    c.alpha_correct = ac;
    // FDiff-scale: diffuse once, then rescale for every s.
    Matrix propagated;
    Matrix autoscaled;
    if (autoscale) {
      autoscaled = CorrectAutoscale(z, train, sym, c).corrected;
    } else if (fdiff) {
      c.scale = 1.0;
      propagated =
          CorrectFDiff(z, train, valid.nodes, row_stochastic, c).propagated;
    }
    for (double s : scales) {
      Matrix corrected;
      if (autoscale) {
        corrected = autoscaled;
      } else if (fdiff) {
        corrected = z - s * propagated;
      } else if (mode == PipelineMode::kLpOnly) {
        corrected = Matrix::Zero(z.rows(), z.cols());
      } else {
        corrected = z;
      }
      if (!smooths) {
        result.evaluated.push_back(
            {ac, smooth.alpha_smooth, s,
             ValidAccuracy(ArgmaxRows(corrected), valid)});
        continue;
      }
      const Matrix guess =
          mode == PipelineMode::kBasic
              ? corrected
              : MakeGuess(corrected, train, valid, LabelSource::kTrainOnly);
      for (double as : alpha_s) {
        search_smooth.alpha_smooth = as;
        SmoothResult sm = Smooth(guess, sym, search_smooth);
        result.evaluated.push_back(
            {ac, as, s, ValidAccuracy(sm.labels, valid)});
      }
    }
  }

  const GridPoint* best = &result.evaluated.front();
  for (const GridPoint& p : result.evaluated) {
    const auto key = [](const GridPoint& g) {
      return std::make_tuple(-g.valid_accuracy, g.alpha_correct,
                             g.alpha_smooth, g.scale);
    };
    if (key(p) < key(*best)) best = &p;
  }
  result.best = *best;
  result.correction = correction;
  result.correction.alpha_correct = best->alpha_correct;
  result.correction.scale = best->scale;
  result.smooth = smooth;
  result.smooth.alpha_smooth = best->alpha_smooth;
  return result;
}

}  // namespace csg
