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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcdm/error.hpp"
#include "mcdm/matrix.hpp"

namespace mcdm {

enum class Direction { Maximize, Minimize };

std::string_view to_string(Direction direction);
std::optional<Direction> parse_direction(std::string_view text);

struct CriterionSpec {
  std::string name;
  Direction direction = Direction::Maximize;
  double weight = 0.0;

  friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;
};

/// The alternatives-criteria matrix together with its criterion metadata.
/// `values` is kept as nested rows so that malformed input can be reported
/// by validate_problem instead of being rejected at construction.
struct DecisionProblem {
  std::vector<std::string> alternatives;
  std::vector<CriterionSpec> criteria;
  std::vector<std::vector<double>> values;

  std::size_t num_alternatives() const { return alternatives.size(); }
  std::size_t num_criteria() const { return criteria.size(); }

  Matrix matrix() const { return Matrix::from_rows(values); }
  std::vector<Direction> directions() const;
  std::vector<double> weights() const;

  friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;
};

enum class Method { Topsis, Gra, Vikor, Edas, Mabac, Codas, Piv, Marcos, Probid };

inline constexpr std::array<Method, 9> kAllMethods = {
    Method::Topsis, Method::Gra,   Method::Vikor,  Method::Edas,   Method::Mabac,
    Method::Codas,  Method::Piv,   Method::Marcos, Method::Probid,
};

/// Stable lowercase identifiers used by the CLI and the JSON API.
std::string_view method_id(Method method);
std::optional<Method> parse_method(std::string_view id);

enum class GraVariant { Unweighted, Weighted };

std::string_view to_string(GraVariant variant);
std::optional<GraVariant> parse_gra_variant(std::string_view text);

struct MethodParams {
  double vikor_gamma = 0.5;
  GraVariant gra_variant = GraVariant::Unweighted;
  double gra_zeta = 0.5;
  double codas_tau = 0.02;

  friend bool operator==(const MethodParams&, const MethodParams&) = default;
};

/// Range checks on every parameter; returns InvalidParameter issues.
std::vector<Issue> validate_params(const MethodParams& params);

enum class Orientation { HigherBetter, LowerBetter };

std::string_view to_string(Orientation orientation);
Orientation orientation_of(Method method);

using Diagnostic =
    std::variant<bool, double, std::vector<double>, Matrix, std::vector<std::string>>;

struct MethodResult {
  Method method = Method::Topsis;
  std::vector<double> scores;
  Orientation orientation = Orientation::HigherBetter;
  std::vector<int> ranks;
  std::map<std::string, Diagnostic> diagnostics;

  /// Convenience accessors; throw std::out_of_range or std::bad_variant_access.
  const std::vector<double>& vector(const std::string& name) const;
  const Matrix& matrix(const std::string& name) const;
  double scalar(const std::string& name) const;
  bool flag(const std::string& name) const;
  const std::vector<std::string>& labels(const std::string& name) const;
};

/// Two scores closer than this are treated as tied.
inline constexpr double kTieTolerance = 1e-12;
/// Allowed deviation of the weight sum from 1.
inline constexpr double kWeightSumTolerance = 1e-9;

/// Structural invariants plus the preconditions of every method in `methods`.
/// Returns an empty list when the problem is usable.
std::vector<Issue> validate_problem(const DecisionProblem& problem,
                                    std::span<const Method> methods = {});

/// Throws Error carrying every issue when validate_problem is not clean.
void require_valid(const DecisionProblem& problem, std::span<const Method> methods = {});

/// Competition ranking: 1 is best, tied scores share the smallest rank and
/// the next distinct score is ranked after all strictly better ones.
std::vector<int> rank_from_scores(std::span<const double> scores, Orientation orientation);

/// Indices ordered best first; display ties are broken by original index.
std::vector<std::size_t> order_by_rank(std::span<const int> ranks);

/// Copy of `problem` with the weights divided by their sum.
DecisionProblem with_normalized_weights(DecisionProblem problem);

}  // namespace mcdm
