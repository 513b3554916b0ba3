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
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcdm/analysis.hpp"
#include "mcdm/io.hpp"

namespace mcdm {

struct SweepPlan {
  std::vector<Method> methods;
  std::vector<SweepSetting> settings;
};

/// `parameter` is gamma, zeta, tau or weight:NAME. Empty `values` selects a
/// default grid; empty `methods` selects the method the parameter belongs to
/// (every requested method for weight sweeps).
SweepPlan make_sweep_plan(const ProblemDocument& doc, std::string_view parameter,
                          std::vector<double> values, std::vector<Method> methods);

/// Reads `{"parameter", "criterion", "values", "method"|"methods"}` or
/// `{"weight_samples": [[...]], ...}`; pointers are rooted at /sweep.
SweepPlan sweep_plan_from_json(const nlohmann::json& sweep, const ProblemDocument& doc);

}  // namespace mcdm
