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

#include "mcdm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mcdm/methods.hpp"

namespace mcdm {

double spearman(std::span<const int> a, std::span<const int> b) {
  const std::size_t m = a.size();
  if (m == 0 || b.size() != m) return 0.0;
  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= static_cast<double>(m);
  mean_b /= static_cast<double>(m);
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) {
    return std::equal(a.begin(), a.end(), b.begin()) ? 1.0 : 0.0;
  }
  return std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

namespace {

std::vector<Issue> issues_of(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) return err->issues();
  return {{ErrorCode::DegenerateProblem, {}, e.what()}};
}

std::string top_choice(const DecisionProblem& problem, const std::vector<int>& ranks) {
  return problem.alternatives[order_by_rank(ranks).front()];
}

PairOrder pair_order(int rank_a, int rank_b) {
  if (rank_a < rank_b) return PairOrder::FirstAhead;
  if (rank_a > rank_b) return PairOrder::SecondAhead;
  return PairOrder::Tied;
}

}  // namespace

ComparisonReport compare_methods(const DecisionProblem& problem, std::span<const Method> methods,
                                 const MethodParams& params) {
  ComparisonReport report;
  report.alternatives = problem.alternatives;
  report.rank_table.assign(problem.num_alternatives(), {});

  for (Method method : methods) {
    try {
      auto result = run_method(method, problem, params);
      for (std::size_t i = 0; i < result.ranks.size(); ++i) {
        report.rank_table[i].push_back(result.ranks[i]);
      }
      report.top_choices.push_back(top_choice(problem, result.ranks));
      report.methods.push_back(method);
      report.results.push_back(std::move(result));
    } catch (const std::exception& e) {
      report.failures.push_back({method, issues_of(e)});
    }
  }

  const std::size_t k = report.methods.size();
  report.correlations.assign(k, std::vector<double>(k, 1.0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const double rho = spearman(report.results[a].ranks, report.results[b].ranks);
      report.correlations[a][b] = rho;
      report.correlations[b][a] = rho;
    }
  }
  return report;
}

std::string_view to_string(PairOrder order) {
  switch (order) {
    case PairOrder::FirstAhead: return "first_ahead";
    case PairOrder::Tied: return "tied";
    case PairOrder::SecondAhead: return "second_ahead";
  }
  return "unknown";
}

DecisionProblem remove_alternatives(const DecisionProblem& problem,
                                    std::span<const std::string> labels) {
  std::set<std::string> drop;
  for (const auto& label : labels) {
    if (std::find(problem.alternatives.begin(), problem.alternatives.end(), label) ==
        problem.alternatives.end()) {
      throw Error(ErrorCode::UnknownAlternative, "no alternative labelled '" + label + "'");
    }
    drop.insert(label);
  }
  if (problem.num_alternatives() < drop.size() + 2) {
    throw Error(ErrorCode::TooFewAlternatives,
                "m >= 2 required: removing " + std::to_string(drop.size()) + " of " +
                    std::to_string(problem.num_alternatives()) +
                    " alternatives leaves fewer than two");
  }
  DecisionProblem reduced;
  reduced.criteria = problem.criteria;
  for (std::size_t i = 0; i < problem.num_alternatives(); ++i) {
    if (drop.count(problem.alternatives[i])) continue;
    reduced.alternatives.push_back(problem.alternatives[i]);
    if (i < problem.values.size()) reduced.values.push_back(problem.values[i]);
  }
  return reduced;
}

std::vector<ReversalReport> rank_reversal_probe(const DecisionProblem& problem,
                                                std::span<const Method> methods,
                                                const MethodParams& params,
                                                std::span<const std::vector<std::string>> drops) {
  // Validate every drop set up front so a bad label fails the whole probe.
  std::vector<DecisionProblem> reduced;
  reduced.reserve(drops.size());
  for (const auto& drop : drops) reduced.push_back(remove_alternatives(problem, drop));

  std::vector<std::optional<MethodResult>> originals;
  std::vector<std::vector<Issue>> original_issues;
  for (Method method : methods) {
    try {
      originals.emplace_back(run_method(method, problem, params));
      original_issues.emplace_back();
    } catch (const std::exception& e) {
      originals.emplace_back(std::nullopt);
      original_issues.push_back(issues_of(e));
    }
  }

  std::vector<ReversalReport> reports;
  for (std::size_t d = 0; d < drops.size(); ++d) {
    ReversalReport report;
    report.removed = drops[d];
    std::ostringstream description;
    description << "remove";
    for (const auto& label : drops[d]) description << ' ' << label;
    report.perturbation = description.str();
    report.survivors = reduced[d].alternatives;

    // Index of each survivor in the original problem.
    std::vector<std::size_t> origin;
    for (const auto& label : report.survivors) {
      origin.push_back(static_cast<std::size_t>(
          std::find(problem.alternatives.begin(), problem.alternatives.end(), label) -
          problem.alternatives.begin()));
    }

    for (std::size_t k = 0; k < methods.size(); ++k) {
      MethodReversal entry;
      entry.method = methods[k];
      if (!originals[k]) {
        entry.issues = original_issues[k];
        report.methods.push_back(std::move(entry));
        continue;
      }
      entry.ranks_before = originals[k]->ranks;
      try {
        entry.ranks_after = run_method(methods[k], reduced[d], params).ranks;
        entry.evaluated = true;
      } catch (const std::exception& e) {
        entry.issues = issues_of(e);
        report.methods.push_back(std::move(entry));
        continue;
      }
      const std::size_t s = report.survivors.size();
      for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = a + 1; b < s; ++b) {
          const PairOrder before =
              pair_order(entry.ranks_before[origin[a]], entry.ranks_before[origin[b]]);
          const PairOrder after = pair_order(entry.ranks_after[a], entry.ranks_after[b]);
          if (before != after) {
            entry.flips.push_back({report.survivors[a], report.survivors[b], before, after});
          }
        }
      }
      report.methods.push_back(std::move(entry));
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view text) {
  if (text == "gamma") return SweepParameter::Gamma;
  if (text == "zeta") return SweepParameter::Zeta;
  if (text == "tau") return SweepParameter::Tau;
  return std::nullopt;
}

std::string_view to_string(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::Gamma: return "gamma";
    case SweepParameter::Zeta: return "zeta";
    case SweepParameter::Tau: return "tau";
  }
  return "unknown";
}

namespace {

std::string format_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::vector<SweepSetting> parameter_grid(SweepParameter parameter, std::span<const double> values,
                                         const MethodParams& base) {
  std::vector<SweepSetting> settings;
  for (double v : values) {
    SweepSetting s{std::string(to_string(parameter)) + "=" + format_value(v), base, {}};
    switch (parameter) {
      case SweepParameter::Gamma: s.params.vikor_gamma = v; break;
      case SweepParameter::Zeta:
        s.params.gra_zeta = v;
        s.params.gra_variant = GraVariant::Weighted;
        break;
      case SweepParameter::Tau: s.params.codas_tau = v; break;
    }
    settings.push_back(std::move(s));
  }
  return settings;
}

std::vector<SweepSetting> single_weight_grid(const DecisionProblem& problem,
                                             std::size_t criterion,
                                             std::span<const double> values,
                                             const MethodParams& base) {
  if (criterion >= problem.num_criteria()) {
    throw Error(ErrorCode::InvalidParameter, "criterion index out of range");
  }
  const auto original = problem.weights();
  const double rest = 1.0 - original[criterion];
  std::vector<SweepSetting> settings;
  for (double v : values) {
    std::vector<double> w = original;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j == criterion) continue;
      w[j] = rest > 0.0 ? original[j] * (1.0 - v) / rest : 0.0;
    }
    w[criterion] = v;
    settings.push_back({"w[" + problem.criteria[criterion].name + "]=" + format_value(v), base,
                        std::move(w)});
  }
  return settings;
}

std::vector<SweepSetting> weight_samples(std::span<const std::vector<double>> samples,
                                         const MethodParams& base) {
  std::vector<SweepSetting> settings;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    settings.push_back({"weights#" + std::to_string(s + 1), base, samples[s]});
  }
  return settings;
}

SweepTable sensitivity_sweep(const DecisionProblem& problem, Method method,
                             std::span<const SweepSetting> settings) {
  SweepTable table;
  table.method = method;
  table.alternatives = problem.alternatives;
  std::optional<std::string> previous_top;
  for (const auto& setting : settings) {
    SweepRow row;
    row.setting = setting;
    try {
      DecisionProblem variant = problem;
      if (!setting.weights.empty()) {
        if (setting.weights.size() != variant.num_criteria()) {
          throw Error(ErrorCode::CountMismatch,
                      "weight sample has " + std::to_string(setting.weights.size()) +
                          " entries for " + std::to_string(variant.num_criteria()) +
                          " criteria");
        }
        for (std::size_t j = 0; j < variant.num_criteria(); ++j) {
          variant.criteria[j].weight = setting.weights[j];
        }
      }
      auto result = run_method(method, variant, setting.params);
      row.scores = std::move(result.scores);
      row.ranks = std::move(result.ranks);
      row.top_choice = top_choice(problem, row.ranks);
      row.top_changed = previous_top && *previous_top != row.top_choice;
      previous_top = row.top_choice;
      row.evaluated = true;
    } catch (const std::exception& e) {
      row.issues = issues_of(e);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace mcdm
