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

#include <ostream>
#include <span>
#include <string>

namespace mcdm::cli {

/// Runs one command line (arguments after the program name). Returns 0 on
/// success, 1 for input that fails parsing or validation and 2 for usage errors.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Applies MCDM_LOG (trace, debug, info, warn, error, off) to the stderr logger.
void configure_logging();

}  // namespace mcdm::cli
