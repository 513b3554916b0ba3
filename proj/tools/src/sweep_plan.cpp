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

#include "sweep_plan.hpp"

#include <algorithm>

namespace mcdm {

using nlohmann::json;

namespace {

std::vector<double> default_grid(std::string_view parameter) {
  if (parameter == "gamma") return {0.0, 0.25, 0.5, 0.75, 1.0};
  if (parameter == "zeta") return {0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
  if (parameter == "tau") return {0.01, 0.02, 0.03, 0.04, 0.05};
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
}

Error sweep_error(const std::string& pointer, const std::string& message) {
  return Error(ErrorCode::SchemaViolation, message, {.row = {}, .column = {}, .pointer = pointer});
}

}  // namespace

SweepPlan make_sweep_plan(const ProblemDocument& doc, std::string_view parameter,
                          std::vector<double> values, std::vector<Method> methods) {
  SweepPlan plan;
  if (values.empty()) values = default_grid(parameter.substr(0, parameter.find(':')));

  if (parameter.substr(0, 7) == "weight:") {
    const std::string name(parameter.substr(7));
    const auto& criteria = doc.problem.criteria;
    const auto it = std::find_if(criteria.begin(), criteria.end(),
                                 [&](const CriterionSpec& c) { return c.name == name; });
    if (it == criteria.end()) {
      throw Error(ErrorCode::InvalidParameter, "no criterion named '" + name + "' to sweep");
    }
    plan.settings = single_weight_grid(doc.problem, static_cast<std::size_t>(it - criteria.begin()),
                                       values, doc.params);
    plan.methods = methods.empty() ? doc.methods : std::move(methods);
    return plan;
  }

  const auto which = parse_sweep_parameter(parameter);
  if (!which) {
    throw Error(ErrorCode::InvalidParameter,
                "sweep parameter '" + std::string(parameter) +
                    "' is not one of gamma, zeta, tau, weight:NAME");
  }
  plan.settings = parameter_grid(*which, values, doc.params);
  if (methods.empty()) {
    switch (*which) {
      case SweepParameter::Gamma: methods = {Method::Vikor}; break;
      case SweepParameter::Zeta: methods = {Method::Gra}; break;
      case SweepParameter::Tau: methods = {Method::Codas}; break;
    }
  }
  plan.methods = std::move(methods);
  return plan;
}

SweepPlan sweep_plan_from_json(const json& sweep, const ProblemDocument& doc) {
  std::vector<Method> methods;
  auto add_method = [&](const json& id, const std::string& pointer) {
    const auto m = id.is_string() ? parse_method(id.get<std::string>()) : std::nullopt;
    if (!m) throw Error(ErrorCode::UnknownMethod, "unknown method id " + id.dump(), {.row = {}, .column = {}, .pointer = pointer});
    methods.push_back(*m);
  };
  if (sweep.contains("method")) add_method(sweep["method"], "/sweep/method");
  if (sweep.contains("methods")) {
    if (!sweep["methods"].is_array()) throw sweep_error("/sweep/methods", "expected an array of method ids");
    for (std::size_t k = 0; k < sweep["methods"].size(); ++k) {
      add_method(sweep["methods"][k], "/sweep/methods/" + std::to_string(k));
    }
  }

  if (sweep.contains("weight_samples")) {
    const auto& samples = sweep["weight_samples"];
    if (!samples.is_array() || samples.empty()) {
      throw sweep_error("/sweep/weight_samples", "expected a non-empty array of weight vectors");
    }
    std::vector<std::vector<double>> vectors;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto& s = samples[k];
      if (!s.is_array() || !std::all_of(s.begin(), s.end(), [](const json& v) { return v.is_number(); })) {
        throw sweep_error("/sweep/weight_samples/" + std::to_string(k), "expected an array of numbers");
      }
      vectors.push_back(s.get<std::vector<double>>());
    }
    SweepPlan plan;
    plan.settings = weight_samples(vectors, doc.params);
    plan.methods = methods.empty() ? doc.methods : std::move(methods);
    return plan;
  }

  if (!sweep.contains("parameter") || !sweep["parameter"].is_string()) {
    throw sweep_error("/sweep/parameter", "expected one of gamma, zeta, tau, weight");
  }
  std::string parameter = sweep["parameter"].get<std::string>();
  if (parameter == "weight") {
    if (!sweep.contains("criterion") || !sweep["criterion"].is_string()) {
      throw sweep_error("/sweep/criterion", "a weight sweep needs the criterion name");
    }
    parameter += ":" + sweep["criterion"].get<std::string>();
  } else if (!parse_sweep_parameter(parameter)) {
    throw sweep_error("/sweep/parameter", "expected one of gamma, zeta, tau, weight");
  }

  std::vector<double> values;
  if (sweep.contains("values")) {
    const auto& v = sweep["values"];
    if (!v.is_array() || !std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number(); })) {
      throw sweep_error("/sweep/values", "expected an array of numbers");
    }
    values = v.get<std::vector<double>>();
  }
  try {
    return make_sweep_plan(doc, parameter, std::move(values), std::move(methods));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidParameter) throw sweep_error("/sweep/criterion", e.issues().front().message);
    throw;
  }
}

}  // namespace mcdm
