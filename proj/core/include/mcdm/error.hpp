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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcdm {

enum class ErrorCode {
  // Structural problems with a decision problem.
  NonRectangular,
  NonFinite,
  WeightSumInvalid,
  WeightOutOfRange,
  DuplicateLabel,
  TooFewAlternatives,
  NoCriteria,
  // Method-specific preconditions.
  DegenerateCriterion,
  NonPositiveValue,
  ZeroColumnNorm,
  DegenerateProblem,
  InvalidParameter,
  // Input handling.
  UnknownMethod,
  UnknownAlternative,
  ParseError,
  SchemaViolation,
  CountMismatch,
};

std::string_view to_string(ErrorCode code);

/// Where an issue was found. Row and column are 1-based; `pointer` is a JSON
/// pointer when the input was a JSON document.
struct Location {
  std::optional<std::size_t> row;
  std::optional<std::size_t> column;
  std::string pointer;

  bool empty() const { return !row && !column && pointer.empty(); }
  friend bool operator==(const Location&, const Location&) = default;
};

struct Issue {
  ErrorCode code;
  Location location;
  std::string message;

  friend bool operator==(const Issue&, const Issue&) = default;
};

/// Thrown by every operation that rejects its input. Always carries at least
/// one issue; the first one determines code().
class Error : public std::runtime_error {
 public:
  explicit Error(std::vector<Issue> issues);
  Error(ErrorCode code, std::string message, Location location = {});

  ErrorCode code() const { return issues_.front().code; }
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::vector<Issue> issues_;
};

}  // namespace mcdm
