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

#include <benchmark/benchmark.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mcdm/analysis.hpp"
#include "mcdm/io.hpp"
#include "mcdm/methods.hpp"

namespace {

using namespace mcdm;

const DecisionProblem& fixture(const std::string& name) {
  static std::map<std::string, DecisionProblem> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    std::ifstream in(std::string(MCDM_FIXTURE_DIR) + "/" + name + ".json");
    std::ostringstream text;
    text << in.rdbuf();
    it = cache.emplace(name, parse_json(text.str()).problem).first;
  }
  return it->second;
}

void BM_Method(benchmark::State& state, Method method, const char* name) {
  const auto& p = fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(run_method(method, p));
}

void BM_Compare(benchmark::State& state, const char* name) {
  const auto& p = fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(compare_methods(p, kAllMethods));
}

void BM_Reversal(benchmark::State& state) {
  const auto& p = fixture("e74");
  std::vector<std::vector<std::string>> drops;
  for (const auto& label : p.alternatives) drops.push_back({label});
  for (auto _ : state) benchmark::DoNotOptimize(rank_reversal_probe(p, kAllMethods, {}, drops));
}

void register_all() {
  for (const char* name : {"table71", "e74"}) {
    for (Method m : kAllMethods) {
      benchmark::RegisterBenchmark((std::string(method_id(m)) + "/" + name).c_str(), BM_Method, m, name);
    }
    benchmark::RegisterBenchmark((std::string("compare/") + name).c_str(), BM_Compare, name);
  }
  benchmark::RegisterBenchmark("reversal/e74", BM_Reversal);
}

const int registered = (register_all(), 0);

}  // namespace
BENCHMARK_MAIN();
