// Copyright 2026 The mcdm Authors
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

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "mcdm/matrix.hpp"
#include "mcdm/problem.hpp"

namespace mcdm {

enum class Scheme { Vector, MaxMin, VikorDeviation, Max };

std::string_view to_string(Scheme scheme);

/// A normalized (and possibly weighted) copy of the decision matrix.
///
/// `directions` are the directions of the raw criteria. Whether they still
/// apply to `values` depends on the scheme: Vector keeps them, MaxMin and Max
/// turn every column into a benefit column, VikorDeviation turns every column
/// into a deviation where 0 is best.
struct NormalizedMatrix {
  Matrix values;
  Scheme scheme = Scheme::Vector;
  bool weighted = false;
  std::vector<Direction> directions;

  /// Direction of column j in terms of `values`.
  Direction effective_direction(std::size_t j) const;
};

/// F_ij = f_ij / ||f_.j||_2. Throws ZeroColumnNorm.
NormalizedMatrix vector_normalize(const Matrix& raw, std::span<const Direction> directions);
NormalizedMatrix vector_normalize(const DecisionProblem& problem);

/// (f - min)/(max - min) for benefit columns, (max - f)/(max - min) for cost
/// columns. Throws DegenerateCriterion on a constant column.
NormalizedMatrix maxmin_normalize(const Matrix& raw, std::span<const Direction> directions);
NormalizedMatrix maxmin_normalize(const DecisionProblem& problem);

/// (best - f)/(best - worst) per column; 0 is best, 1 is worst.
/// Throws DegenerateCriterion on a constant column.
NormalizedMatrix vikor_deviation_normalize(const Matrix& raw,
                                           std::span<const Direction> directions);
NormalizedMatrix vikor_deviation_normalize(const DecisionProblem& problem);

/// f / max for benefit columns, min / f for cost columns.
/// Throws NonPositiveValue unless every entry is strictly positive.
NormalizedMatrix max_normalize(const Matrix& raw, std::span<const Direction> directions);
NormalizedMatrix max_normalize(const DecisionProblem& problem);

/// v_ij = F_ij * w_j.
NormalizedMatrix apply_weights(const NormalizedMatrix& normalized, std::span<const double> weights);
NormalizedMatrix apply_weights(const NormalizedMatrix& normalized,
                               std::span<const CriterionSpec> criteria);

/// v_ij = (1 + F_ij) * w_j on a Max-Min matrix; every output is positive.
NormalizedMatrix mabac_weighting(const NormalizedMatrix& normalized,
                                 std::span<const double> weights);
NormalizedMatrix mabac_weighting(const NormalizedMatrix& normalized,
                                 std::span<const CriterionSpec> criteria);

}  // namespace mcdm
