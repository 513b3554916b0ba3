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

#include "mcdm/reference.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace mcdm {

std::string_view to_string(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::PositiveIdeal: return "positive_ideal";
    case ReferenceKind::NegativeIdeal: return "negative_ideal";
    case ReferenceKind::Average: return "average";
    case ReferenceKind::Border: return "border";
    case ReferenceKind::TieredIdeal: return "tiered_ideal";
  }
  return "unknown";
}

namespace {

IdealPair extremes(const Matrix& values, auto&& direction_of, ReferenceDomain domain) {
  if (values.rows() == 0) throw std::invalid_argument("ideal_solutions: empty matrix");
  IdealPair out{{ReferenceKind::PositiveIdeal, domain, std::vector<double>(values.cols()), 0},
                {ReferenceKind::NegativeIdeal, domain, std::vector<double>(values.cols()), 0}};
  for (std::size_t j = 0; j < values.cols(); ++j) {
    double lo = values(0, j);
    double hi = lo;
    for (std::size_t i = 1; i < values.rows(); ++i) {
      lo = std::min(lo, values(i, j));
      hi = std::max(hi, values(i, j));
    }
    const bool maximize = direction_of(j) == Direction::Maximize;
    out.positive.values[j] = maximize ? hi : lo;
    out.negative.values[j] = maximize ? lo : hi;
  }
  return out;
}

}  // namespace

IdealPair ideal_solutions(const NormalizedMatrix& matrix) {
  return extremes(
      matrix.values, [&](std::size_t j) { return matrix.effective_direction(j); },
      matrix.weighted ? ReferenceDomain::WeightedNormalized : ReferenceDomain::Normalized);
}

IdealPair ideal_solutions(const DecisionProblem& problem) {
  return extremes(
      problem.matrix(), [&](std::size_t j) { return problem.criteria.at(j).direction; },
      ReferenceDomain::RawMatrix);
}

namespace {

std::vector<double> column_means(const Matrix& values) {
  std::vector<double> mean(values.cols(), 0.0);
  for (std::size_t j = 0; j < values.cols(); ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < values.rows(); ++i) sum += values(i, j);
    mean[j] = sum / static_cast<double>(values.rows());
  }
  return mean;
}

}  // namespace

ReferenceSolution average_solution_raw(const DecisionProblem& problem) {
  return {ReferenceKind::Average, ReferenceDomain::RawMatrix, column_means(problem.matrix()), 0};
}

ReferenceSolution average_solution_weighted(const NormalizedMatrix& matrix) {
  if (!matrix.weighted) {
    throw std::logic_error("average_solution_weighted expects a weighted matrix");
  }
  return {ReferenceKind::Average, ReferenceDomain::WeightedNormalized,
          column_means(matrix.values), 0};
}

ReferenceSolution border_approximation(const NormalizedMatrix& matrix) {
  const Matrix& v = matrix.values;
  ReferenceSolution out{ReferenceKind::Border, ReferenceDomain::WeightedNormalized,
                        std::vector<double>(v.cols()), 0};
  for (std::size_t j = 0; j < v.cols(); ++j) {
    double log_sum = 0.0;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      if (!(v(i, j) > 0.0)) {
        throw Error(ErrorCode::NonPositiveValue,
                    "border approximation needs positive entries",
                    {.row = i + 1, .column = j + 1, .pointer = {}});
      }
      log_sum += std::log(v(i, j));
    }
    out.values[j] = std::exp(log_sum / static_cast<double>(v.rows()));
  }
  return out;
}

std::vector<ReferenceSolution> tiered_ideals(const NormalizedMatrix& matrix) {
  const Matrix& v = matrix.values;
  const std::size_t m = v.rows();
  std::vector<ReferenceSolution> tiers(m);
  for (std::size_t k = 0; k < m; ++k) {
    tiers[k] = {ReferenceKind::TieredIdeal,
                matrix.weighted ? ReferenceDomain::WeightedNormalized : ReferenceDomain::Normalized,
                std::vector<double>(v.cols()), k + 1};
  }
  for (std::size_t j = 0; j < v.cols(); ++j) {
    std::vector<double> column = v.column(j);
    if (matrix.effective_direction(j) == Direction::Maximize) {
      std::sort(column.begin(), column.end(), std::greater<>());
    } else {
      std::sort(column.begin(), column.end());
    }
    for (std::size_t k = 0; k < m; ++k) tiers[k].values[j] = column[k];
  }
  return tiers;
}

}  // namespace mcdm
