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
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcdm/analysis.hpp"
#include "mcdm/problem.hpp"

namespace mcdm {

/// Criterion metadata for CSV input, supplied by flags or a sidecar file.
/// `names` is optional; when present it must match the CSV header.
struct CriteriaConfig {
  std::vector<Direction> directions;
  std::vector<double> weights;
  std::vector<std::string> names;
  bool normalize_weights = false;
};

/// Parses the header/label CSV grammar and attaches the criteria config.
/// Throws Error with ParseError, CountMismatch or structural codes.
DecisionProblem parse_csv(std::string_view text, const CriteriaConfig& config);

/// `{"criteria": [{"name", "direction", "weight"}]}`, or separate
/// `"directions"` and `"weights"` arrays.
CriteriaConfig parse_sidecar(std::string_view text);

struct ProblemDocument {
  DecisionProblem problem;
  MethodParams params;
  std::vector<Method> methods;
};

/// Parses a nlohmann value against the document schema. Unknown top-level
/// keys are ignored so request envelopes can carry extra fields.
ProblemDocument document_from_json(const nlohmann::json& doc, bool normalize_weights = false);
ProblemDocument parse_json(std::string_view text, bool normalize_weights = false);

/// Parses JSON text, mapping syntax errors to ParseError.
nlohmann::json parse_json_text(std::string_view text);

/// Comma-separated list helpers shared by the CLI and sidecar loader.
std::vector<Direction> parse_direction_list(std::string_view text);
std::vector<double> parse_number_list(std::string_view text, std::string_view what);
std::vector<Method> parse_method_list(std::string_view text);
std::vector<std::string> split_list(std::string_view text);

/// Strict dot-decimal parse of a whole string.
std::optional<double> parse_decimal(std::string_view text);

nlohmann::json to_json(const Issue& issue);
nlohmann::json errors_to_json(const std::vector<Issue>& issues);
nlohmann::json to_json(const ProblemDocument& document);
nlohmann::json to_json(const MethodResult& result);
nlohmann::json rank_document(const DecisionProblem& problem,
                             const std::vector<MethodResult>& results);
nlohmann::json to_json(const ComparisonReport& report);
nlohmann::json to_json(const std::vector<ReversalReport>& reports);
nlohmann::json to_json(const SweepTable& table);

/// Serializes with every floating-point value at 17 significant digits, so
/// parsing the text reproduces each double exactly. Object keys are sorted.
std::string dump_json(const nlohmann::json& value, int indent = 2);

/// Human-readable tables, four decimals.
std::string format_rank_table(const DecisionProblem& problem,
                              const std::vector<MethodResult>& results);
std::string format_comparison(const ComparisonReport& report);
std::string format_reversal(const std::vector<ReversalReport>& reports);
std::string format_sweep(const SweepTable& table);
std::string format_issues(const std::vector<Issue>& issues);

}  // namespace mcdm
