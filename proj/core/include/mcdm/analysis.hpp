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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcdm/problem.hpp"

namespace mcdm {

/// A method that could not be evaluated, with the reasons.
struct MethodFailure {
  Method method = Method::Topsis;
  std::vector<Issue> issues;
};

struct ComparisonReport {
  std::vector<std::string> alternatives;
  /// Methods that produced a result, in request order.
  std::vector<Method> methods;
  std::vector<MethodResult> results;
  /// rank_table[i][k] is the rank of alternative i under methods[k].
  std::vector<std::vector<int>> rank_table;
  /// Best alternative per method; ties go to the lowest index.
  std::vector<std::string> top_choices;
  /// Spearman correlation between the rank columns of methods k and l.
  std::vector<std::vector<double>> correlations;
  std::vector<MethodFailure> failures;
};

/// Pearson correlation of two rank vectors. When either vector is constant the
/// correlation is undefined; it is reported as 1 for identical vectors and 0
/// otherwise.
double spearman(std::span<const int> a, std::span<const int> b);

/// Runs each method and assembles the rank table; a failing method is listed
/// under `failures` and the rest continue.
ComparisonReport compare_methods(const DecisionProblem& problem, std::span<const Method> methods,
                                 const MethodParams& params = {});

enum class PairOrder { FirstAhead, Tied, SecondAhead };

std::string_view to_string(PairOrder order);

struct FlippedPair {
  std::string first;
  std::string second;
  PairOrder before = PairOrder::Tied;
  PairOrder after = PairOrder::Tied;
};

struct MethodReversal {
  Method method = Method::Topsis;
  bool evaluated = false;
  std::vector<Issue> issues;
  std::vector<int> ranks_before;
  /// Ranks on the reduced problem, one entry per surviving alternative.
  std::vector<int> ranks_after;
  std::vector<FlippedPair> flips;

  bool affected() const { return !flips.empty(); }
};

struct ReversalReport {
  std::vector<std::string> removed;
  std::string perturbation;
  std::vector<std::string> survivors;
  std::vector<MethodReversal> methods;
};

/// Copy of `problem` without the listed alternatives. Throws
/// UnknownAlternative or TooFewAlternatives.
DecisionProblem remove_alternatives(const DecisionProblem& problem,
                                    std::span<const std::string> labels);

/// For every drop set, removes those alternatives together, re-runs each
/// method and reports surviving pairs whose relative order changed.
std::vector<ReversalReport> rank_reversal_probe(const DecisionProblem& problem,
                                                std::span<const Method> methods,
                                                const MethodParams& params,
                                                std::span<const std::vector<std::string>> drops);

/// One setting of a sensitivity sweep. Empty `weights` keeps the problem's.
struct SweepSetting {
  std::string label;
  MethodParams params;
  std::vector<double> weights;
};

struct SweepRow {
  SweepSetting setting;
  bool evaluated = false;
  std::vector<Issue> issues;
  std::vector<double> scores;
  std::vector<int> ranks;
  std::string top_choice;
  /// True when the top choice differs from the previous evaluated row.
  bool top_changed = false;
};

struct SweepTable {
  Method method = Method::Topsis;
  std::vector<std::string> alternatives;
  std::vector<SweepRow> rows;
};

enum class SweepParameter { Gamma, Zeta, Tau };

std::optional<SweepParameter> parse_sweep_parameter(std::string_view text);
std::string_view to_string(SweepParameter parameter);

/// One setting per value of a single scalar parameter. Sweeping zeta selects
/// the weighted GRA variant, since zeta has no effect otherwise.
std::vector<SweepSetting> parameter_grid(SweepParameter parameter, std::span<const double> values,
                                         const MethodParams& base = {});

/// Sets criterion `criterion` to each value in turn and rescales the other
/// weights proportionally so the total stays 1.
std::vector<SweepSetting> single_weight_grid(const DecisionProblem& problem,
                                             std::size_t criterion,
                                             std::span<const double> values,
                                             const MethodParams& base = {});

/// One setting per explicit weight vector.
std::vector<SweepSetting> weight_samples(std::span<const std::vector<double>> samples,
                                         const MethodParams& base = {});

SweepTable sensitivity_sweep(const DecisionProblem& problem, Method method,
                             std::span<const SweepSetting> settings);

}  // namespace mcdm
