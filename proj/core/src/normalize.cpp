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

#include "mcdm/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mcdm {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Vector: return "vector";
    case Scheme::MaxMin: return "maxmin";
    case Scheme::VikorDeviation: return "vikor_deviation";
    case Scheme::Max: return "max";
  }
  return "unknown";
}

Direction NormalizedMatrix::effective_direction(std::size_t j) const {
  switch (scheme) {
    case Scheme::Vector: return directions.at(j);
    case Scheme::MaxMin:
    case Scheme::Max: return Direction::Maximize;
    case Scheme::VikorDeviation: return Direction::Minimize;
  }
  return Direction::Maximize;
}

namespace {

void check_shape(const Matrix& raw, std::span<const Direction> directions) {
  if (directions.size() != raw.cols()) {
    throw Error(ErrorCode::CountMismatch,
                "got " + std::to_string(directions.size()) + " directions for " +
                    std::to_string(raw.cols()) + " criteria");
  }
}

struct ColumnRange {
  double lo;
  double hi;
};

ColumnRange range_of(const Matrix& raw, std::size_t j) {
  ColumnRange r{raw(0, j), raw(0, j)};
  for (std::size_t i = 1; i < raw.rows(); ++i) {
    r.lo = std::min(r.lo, raw(i, j));
    r.hi = std::max(r.hi, raw(i, j));
  }
  return r;
}

std::vector<double> weights_of(std::span<const CriterionSpec> criteria) {
  std::vector<double> w;
  w.reserve(criteria.size());
  for (const auto& c : criteria) w.push_back(c.weight);
  return w;
}

Error degenerate(std::size_t j) {
  return Error(ErrorCode::DegenerateCriterion,
               "criterion " + std::to_string(j + 1) + " is constant; max - min is zero",
               {.row = {}, .column = j + 1, .pointer = {}});
}

}  // namespace

NormalizedMatrix vector_normalize(const Matrix& raw, std::span<const Direction> directions) {
  check_shape(raw, directions);
  NormalizedMatrix out{Matrix(raw.rows(), raw.cols()), Scheme::Vector, false,
                       {directions.begin(), directions.end()}};
  for (std::size_t j = 0; j < raw.cols(); ++j) {
    // Scale by the largest magnitude so the sum of squares cannot overflow.
    double scale = 0.0;
    for (std::size_t i = 0; i < raw.rows(); ++i) scale = std::max(scale, std::abs(raw(i, j)));
    if (scale == 0.0) {
      throw Error(ErrorCode::ZeroColumnNorm,
                  "criterion " + std::to_string(j + 1) + " has zero L2 norm",
                  {.row = {}, .column = j + 1, .pointer = {}});
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < raw.rows(); ++i) {
      const double x = raw(i, j) / scale;
      sum += x * x;
    }
    const double norm = std::sqrt(sum);
    for (std::size_t i = 0; i < raw.rows(); ++i) out.values(i, j) = raw(i, j) / scale / norm;
  }
  return out;
}

NormalizedMatrix maxmin_normalize(const Matrix& raw, std::span<const Direction> directions) {
  check_shape(raw, directions);
  NormalizedMatrix out{Matrix(raw.rows(), raw.cols()), Scheme::MaxMin, false,
                       {directions.begin(), directions.end()}};
  for (std::size_t j = 0; j < raw.cols(); ++j) {
    const auto [lo, hi] = range_of(raw, j);
    if (lo == hi) throw degenerate(j);
    const double span = hi - lo;
    for (std::size_t i = 0; i < raw.rows(); ++i) {
      out.values(i, j) = directions[j] == Direction::Maximize ? (raw(i, j) - lo) / span
                                                              : (hi - raw(i, j)) / span;
    }
  }
  return out;
}

NormalizedMatrix vikor_deviation_normalize(const Matrix& raw,
                                           std::span<const Direction> directions) {
  check_shape(raw, directions);
  NormalizedMatrix out{Matrix(raw.rows(), raw.cols()), Scheme::VikorDeviation, false,
                       {directions.begin(), directions.end()}};
  for (std::size_t j = 0; j < raw.cols(); ++j) {
    const auto [lo, hi] = range_of(raw, j);
    if (lo == hi) throw degenerate(j);
    const double best = directions[j] == Direction::Maximize ? hi : lo;
    const double worst = directions[j] == Direction::Maximize ? lo : hi;
    for (std::size_t i = 0; i < raw.rows(); ++i) {
      out.values(i, j) = (best - raw(i, j)) / (best - worst);
    }
  }
  return out;
}

NormalizedMatrix max_normalize(const Matrix& raw, std::span<const Direction> directions) {
  check_shape(raw, directions);
  for (std::size_t i = 0; i < raw.rows(); ++i) {
    for (std::size_t j = 0; j < raw.cols(); ++j) {
      if (!(raw(i, j) > 0.0)) {
        throw Error(ErrorCode::NonPositiveValue,
                    "entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                        ") must be strictly positive for Max normalization",
                    {.row = i + 1, .column = j + 1, .pointer = {}});
      }
    }
  }
  NormalizedMatrix out{Matrix(raw.rows(), raw.cols()), Scheme::Max, false,
                       {directions.begin(), directions.end()}};
  for (std::size_t j = 0; j < raw.cols(); ++j) {
    const auto [lo, hi] = range_of(raw, j);
    for (std::size_t i = 0; i < raw.rows(); ++i) {
      out.values(i, j) = directions[j] == Direction::Maximize ? raw(i, j) / hi : lo / raw(i, j);
    }
  }
  return out;
}

NormalizedMatrix vector_normalize(const DecisionProblem& problem) {
  return vector_normalize(problem.matrix(), problem.directions());
}

NormalizedMatrix maxmin_normalize(const DecisionProblem& problem) {
  return maxmin_normalize(problem.matrix(), problem.directions());
}

NormalizedMatrix vikor_deviation_normalize(const DecisionProblem& problem) {
  return vikor_deviation_normalize(problem.matrix(), problem.directions());
}

NormalizedMatrix max_normalize(const DecisionProblem& problem) {
  return max_normalize(problem.matrix(), problem.directions());
}

NormalizedMatrix apply_weights(const NormalizedMatrix& normalized,
                               std::span<const double> weights) {
  if (normalized.weighted) throw std::logic_error("apply_weights: matrix is already weighted");
  if (weights.size() != normalized.values.cols()) {
    throw Error(ErrorCode::CountMismatch, "weight count does not match criteria count");
  }
  NormalizedMatrix out = normalized;
  out.weighted = true;
  for (std::size_t i = 0; i < out.values.rows(); ++i) {
    for (std::size_t j = 0; j < out.values.cols(); ++j) out.values(i, j) *= weights[j];
  }
  return out;
}

NormalizedMatrix apply_weights(const NormalizedMatrix& normalized,
                               std::span<const CriterionSpec> criteria) {
  return apply_weights(normalized, weights_of(criteria));
}

NormalizedMatrix mabac_weighting(const NormalizedMatrix& normalized,
                                 std::span<const double> weights) {
  if (normalized.scheme != Scheme::MaxMin || normalized.weighted) {
    throw std::logic_error("mabac_weighting expects an unweighted Max-Min matrix");
  }
  if (weights.size() != normalized.values.cols()) {
    throw Error(ErrorCode::CountMismatch, "weight count does not match criteria count");
  }
  NormalizedMatrix out = normalized;
  out.weighted = true;
  for (std::size_t i = 0; i < out.values.rows(); ++i) {
    for (std::size_t j = 0; j < out.values.cols(); ++j) {
      out.values(i, j) = (1.0 + normalized.values(i, j)) * weights[j];
    }
  }
  return out;
}

NormalizedMatrix mabac_weighting(const NormalizedMatrix& normalized,
                                 std::span<const CriterionSpec> criteria) {
  return mabac_weighting(normalized, weights_of(criteria));
}

}  // namespace mcdm
