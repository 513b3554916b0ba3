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

#include "mcdm/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mcdm {

std::string_view to_string(Direction direction) {
  return direction == Direction::Maximize ? "max" : "min";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "max" || text == "maximize" || text == "benefit") return Direction::Maximize;
  if (text == "min" || text == "minimize" || text == "cost") return Direction::Minimize;
  return std::nullopt;
}

std::vector<Direction> DecisionProblem::directions() const {
  std::vector<Direction> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) out.push_back(c.direction);
  return out;
}

std::vector<double> DecisionProblem::weights() const {
  std::vector<double> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) out.push_back(c.weight);
  return out;
}

std::string_view method_id(Method method) {
  switch (method) {
    case Method::Topsis: return "topsis";
    case Method::Gra: return "gra";
    case Method::Vikor: return "vikor";
    case Method::Edas: return "edas";
    case Method::Mabac: return "mabac";
    case Method::Codas: return "codas";
    case Method::Piv: return "piv";
    case Method::Marcos: return "marcos";
    case Method::Probid: return "probid";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view id) {
  for (Method m : kAllMethods) {
    if (method_id(m) == id) return m;
  }
  return std::nullopt;
}

std::string_view to_string(GraVariant variant) {
  return variant == GraVariant::Unweighted ? "unweighted" : "weighted";
}

std::optional<GraVariant> parse_gra_variant(std::string_view text) {
  if (text == "unweighted") return GraVariant::Unweighted;
  if (text == "weighted") return GraVariant::Weighted;
  return std::nullopt;
}

std::string_view to_string(Orientation orientation) {
  return orientation == Orientation::HigherBetter ? "higher_better" : "lower_better";
}

Orientation orientation_of(Method method) {
  return (method == Method::Vikor || method == Method::Piv) ? Orientation::LowerBetter
                                                            : Orientation::HigherBetter;
}

const std::vector<double>& MethodResult::vector(const std::string& name) const {
  return std::get<std::vector<double>>(diagnostics.at(name));
}

const Matrix& MethodResult::matrix(const std::string& name) const {
  return std::get<Matrix>(diagnostics.at(name));
}

double MethodResult::scalar(const std::string& name) const {
  return std::get<double>(diagnostics.at(name));
}

bool MethodResult::flag(const std::string& name) const {
  return std::get<bool>(diagnostics.at(name));
}

const std::vector<std::string>& MethodResult::labels(const std::string& name) const {
  return std::get<std::vector<std::string>>(diagnostics.at(name));
}

std::vector<Issue> validate_params(const MethodParams& params) {
  std::vector<Issue> issues;
  auto check = [&](double value, double lo, double hi, bool lo_open, const char* name) {
    const bool ok = std::isfinite(value) && (lo_open ? value > lo : value >= lo) && value <= hi;
    if (!ok) {
      issues.push_back({ErrorCode::InvalidParameter,
                        {.row = {}, .column = {}, .pointer = std::string("/params/") + name},
                        std::string(name) + " = " + std::to_string(value) + " is outside " +
                            (lo_open ? "(" : "[") + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]"});
    }
  };
  check(params.vikor_gamma, 0.0, 1.0, false, "gamma");
  check(params.gra_zeta, 0.0, 1.0, true, "zeta");
  check(params.codas_tau, 0.01, 0.05, false, "tau");
  return issues;
}

namespace {

bool uses_maxmin(Method m) {
  return m == Method::Gra || m == Method::Vikor || m == Method::Mabac;
}

bool needs_positive(Method m) {
  return m == Method::Codas || m == Method::Marcos || m == Method::Edas;
}

bool uses_vector(Method m) {
  return m == Method::Topsis || m == Method::Piv || m == Method::Probid;
}

Location cell(std::size_t i, std::size_t j) { return {.row = i + 1, .column = j + 1, .pointer = {}}; }
Location col(std::size_t j) { return {.row = {}, .column = j + 1, .pointer = {}}; }
Location row(std::size_t i) { return {.row = i + 1, .column = {}, .pointer = {}}; }

void check_structure(const DecisionProblem& p, std::vector<Issue>& issues, bool& rectangular) {
  const std::size_t m = p.alternatives.size();
  const std::size_t n = p.criteria.size();

  if (m < 2) {
    issues.push_back({ErrorCode::TooFewAlternatives, {},
                      "m >= 2 required: at least two alternatives are needed, got " +
                          std::to_string(m)});
  }
  if (n < 1) {
    issues.push_back({ErrorCode::NoCriteria, {}, "n >= 1 required: no criteria given"});
  }

  rectangular = true;
  if (p.values.size() != m) {
    rectangular = false;
    issues.push_back({ErrorCode::NonRectangular, {},
                      "matrix has " + std::to_string(p.values.size()) + " rows but " +
                          std::to_string(m) + " alternatives are labelled"});
  }
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (p.values[i].size() != n) {
      rectangular = false;
      issues.push_back({ErrorCode::NonRectangular, row(i),
                        "row " + std::to_string(i + 1) + " has " +
                            std::to_string(p.values[i].size()) + " entries, expected " +
                            std::to_string(n)});
    }
  }
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    for (std::size_t j = 0; j < p.values[i].size(); ++j) {
      if (!std::isfinite(p.values[i][j])) {
        issues.push_back({ErrorCode::NonFinite, cell(i, j),
                          "entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                              ") is not a finite number"});
      }
    }
  }

  double sum = 0.0;
  bool weights_finite = true;
  for (std::size_t j = 0; j < n; ++j) {
    const double w = p.criteria[j].weight;
    if (!std::isfinite(w) || w <= 0.0 || w > 1.0) {
      weights_finite = weights_finite && std::isfinite(w);
      issues.push_back({ErrorCode::WeightOutOfRange, col(j),
                        "weight of criterion '" + p.criteria[j].name +
                            "' must lie in (0, 1], got " + std::to_string(w)});
    }
    sum += w;
  }
  if (n > 0 && weights_finite && std::abs(sum - 1.0) > kWeightSumTolerance) {
    issues.push_back({ErrorCode::WeightSumInvalid, {},
                      "weights sum to " + std::to_string(sum) + ", expected 1 within 1e-9"});
  }

  std::set<std::string> seen;
  for (std::size_t i = 0; i < m; ++i) {
    if (!seen.insert(p.alternatives[i]).second) {
      issues.push_back({ErrorCode::DuplicateLabel, row(i),
                        "alternative label '" + p.alternatives[i] + "' is not unique"});
    }
  }
  seen.clear();
  for (std::size_t j = 0; j < n; ++j) {
    if (!seen.insert(p.criteria[j].name).second) {
      issues.push_back({ErrorCode::DuplicateLabel, col(j),
                        "criterion name '" + p.criteria[j].name + "' is not unique"});
    }
  }
}

}  // namespace

std::vector<Issue> validate_problem(const DecisionProblem& problem,
                                    std::span<const Method> methods) {
  std::vector<Issue> issues;
  bool rectangular = true;
  check_structure(problem, issues, rectangular);
  if (!rectangular || problem.values.empty() || problem.criteria.empty()) return issues;

  const bool maxmin = std::any_of(methods.begin(), methods.end(), uses_maxmin);
  const bool positive = std::any_of(methods.begin(), methods.end(), needs_positive);
  const bool vector = std::any_of(methods.begin(), methods.end(), uses_vector);

  const std::size_t m = problem.values.size();
  const std::size_t n = problem.criteria.size();
  for (std::size_t j = 0; j < n; ++j) {
    double lo = problem.values[0][j];
    double hi = lo;
    double max_abs = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      lo = std::min(lo, problem.values[i][j]);
      hi = std::max(hi, problem.values[i][j]);
      max_abs = std::max(max_abs, std::abs(problem.values[i][j]));
    }
    if (maxmin && lo == hi) {
      issues.push_back({ErrorCode::DegenerateCriterion, col(j),
                        "criterion '" + problem.criteria[j].name +
                            "' is constant; max - min is zero"});
    }
    if (vector && max_abs == 0.0) {
      issues.push_back({ErrorCode::ZeroColumnNorm, col(j),
                        "criterion '" + problem.criteria[j].name + "' has zero L2 norm"});
    }
  }
  if (positive) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!(problem.values[i][j] > 0.0)) {
          issues.push_back({ErrorCode::NonPositiveValue, cell(i, j),
                            "entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                ") must be strictly positive"});
        }
      }
    }
  }
  return issues;
}

void require_valid(const DecisionProblem& problem, std::span<const Method> methods) {
  auto issues = validate_problem(problem, methods);
  if (!issues.empty()) throw Error(std::move(issues));
}

std::vector<int> rank_from_scores(std::span<const double> scores, Orientation orientation) {
  const std::size_t m = scores.size();
  std::vector<int> ranks(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    int better = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const double diff = orientation == Orientation::HigherBetter ? scores[k] - scores[i]
                                                                   : scores[i] - scores[k];
      if (diff > kTieTolerance) ++better;
    }
    ranks[i] = better + 1;
  }
  return ranks;
}

std::vector<std::size_t> order_by_rank(std::span<const int> ranks) {
  std::vector<std::size_t> order(ranks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
  return order;
}

DecisionProblem with_normalized_weights(DecisionProblem problem) {
  double sum = 0.0;
  for (const auto& c : problem.criteria) sum += c.weight;
  if (sum > 0.0 && std::isfinite(sum)) {
    for (auto& c : problem.criteria) c.weight /= sum;
  }
  return problem;
}

}  // namespace mcdm
