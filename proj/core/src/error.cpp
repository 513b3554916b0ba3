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

#include "mcdm/error.hpp"

#include <utility>

namespace mcdm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonRectangular: return "NonRectangular";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::WeightSumInvalid: return "WeightSumInvalid";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::TooFewAlternatives: return "TooFewAlternatives";
    case ErrorCode::NoCriteria: return "NoCriteria";
    case ErrorCode::DegenerateCriterion: return "DegenerateCriterion";
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::ZeroColumnNorm: return "ZeroColumnNorm";
    case ErrorCode::DegenerateProblem: return "DegenerateProblem";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UnknownMethod: return "UnknownMethod";
    case ErrorCode::UnknownAlternative: return "UnknownAlternative";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::CountMismatch: return "CountMismatch";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Issue>& issues) {
  if (issues.empty()) return "mcdm error";
  std::string text{to_string(issues.front().code)};
  text += ": ";
  text += issues.front().message;
  if (issues.size() > 1) {
    text += " (and " + std::to_string(issues.size() - 1) + " more)";
  }
  return text;
}

}  // namespace

Error::Error(std::vector<Issue> issues)
    : std::runtime_error(summarize(issues)), issues_(std::move(issues)) {
  if (issues_.empty()) {
    issues_.push_back({ErrorCode::DegenerateProblem, {}, "unspecified error"});
  }
}

Error::Error(ErrorCode code, std::string message, Location location)
    : Error(std::vector<Issue>{{code, std::move(location), std::move(message)}}) {}

}  // namespace mcdm
