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

#ifndef CSG_GRID_SEARCH_H_
#define CSG_GRID_SEARCH_H_

#include <vector>

#include "csg/correct_smooth.h"
#include "csg/graph.h"
#include "csg/types.h"

namespace csg {

struct SearchSpace {
  std::vector<double> alpha_correct;
  std::vector<double> alpha_smooth;
  std::vector<double> scale;

  // alpha in {0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99} for both stages and
  // s in {0.5, 0.75, 1.0, 1.5, 2.0}.
  static SearchSpace Default();
  // Just the values already in the configs.
  static SearchSpace Singleton(const CorrectionConfig& correction,
                               const SmoothConfig& smooth);
};

struct GridPoint {
  double alpha_correct = 0.0;
  double alpha_smooth = 0.0;
  double scale = 0.0;
  double valid_accuracy = 0.0;
};

struct GridResult {
  CorrectionConfig correction;  // best, ready to use
  SmoothConfig smooth;
  GridPoint best;
  std::vector<GridPoint> evaluated;
};

// Picks the configuration with the highest validation accuracy among the
// grid points that matter for `mode` and the correction variant (alpha_correct
// is unused by FDiff-scale, s by Autoscale). Ties go to the lexicographically
// smallest (alpha_correct, alpha_smooth, s).
//
// Only train and valid labels are visible here. Guesses are always built from
// train labels during the search, so validation rows stay unseen by the
// smoother; the returned smooth config keeps the caller's label source.
GridResult GridSearch(const Matrix& z, const LabeledNodes& train,
                      const LabeledNodes& valid, const GraphOperator& sym,
                      const GraphOperator& row_stochastic,
                      const CorrectionConfig& correction,
                      const SmoothConfig& smooth, PipelineMode mode,
                      const SearchSpace& space);

}  // namespace csg

#endif  // CSG_GRID_SEARCH_H_
