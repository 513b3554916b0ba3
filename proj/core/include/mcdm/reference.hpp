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

#include <string_view>
#include <utility>
#include <vector>

#include "mcdm/normalize.hpp"
#include "mcdm/problem.hpp"

namespace mcdm {

enum class ReferenceKind { PositiveIdeal, NegativeIdeal, Average, Border, TieredIdeal };
enum class ReferenceDomain { RawMatrix, WeightedNormalized, Normalized };

std::string_view to_string(ReferenceKind kind);

/// A benchmark vector over the criteria.
struct ReferenceSolution {
  ReferenceKind kind = ReferenceKind::PositiveIdeal;
  ReferenceDomain domain = ReferenceDomain::RawMatrix;
  std::vector<double> values;
  /// 1-based tier for TieredIdeal, 0 otherwise.
  std::size_t tier = 0;
};

struct IdealPair {
  ReferenceSolution positive;
  ReferenceSolution negative;
};

/// Best and worst value per column, honouring the matrix's effective
/// directions (all benefit after MaxMin or Max normalization).
IdealPair ideal_solutions(const NormalizedMatrix& matrix);

/// Raw-domain ideals built directly from the decision matrix.
IdealPair ideal_solutions(const DecisionProblem& problem);

/// Column means of the raw matrix.
ReferenceSolution average_solution_raw(const DecisionProblem& problem);

/// Column means of a weighted normalized matrix.
ReferenceSolution average_solution_weighted(const NormalizedMatrix& matrix);

/// Column geometric means, accumulated in log space. Requires positive entries.
ReferenceSolution border_approximation(const NormalizedMatrix& matrix);

/// A_(1) .. A_(m): the k-th best value of every column, duplicates counted
/// with multiplicity. A_(1) is the positive ideal, A_(m) the negative one.
std::vector<ReferenceSolution> tiered_ideals(const NormalizedMatrix& matrix);

}  // namespace mcdm
