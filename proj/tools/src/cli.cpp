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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "mcdm/analysis.hpp"
#include "mcdm/io.hpp"
#include "mcdm/methods.hpp"
#include "service.hpp"
#include "sweep_plan.hpp"

namespace mcdm::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string format = "table";
  std::string directions;
  std::string weights;
  std::string sidecar;
  std::string methods;
  bool normalize_weights = false;
  double gamma = 0.5;
  double zeta = 0.5;
  double tau = 0.02;
  std::string gra_variant;
  std::vector<std::string> drops;
  std::string sweep_param = "gamma";
  std::string grid;
  int port = 8080;
  std::string bind = "127.0.0.1";
  std::string static_dir;

  // Options of the subcommand that was invoked; used to tell explicit flags
  // from defaults.
  CLI::Option* directions_opt = nullptr;
  CLI::Option* weights_opt = nullptr;
  CLI::Option* methods_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* zeta_opt = nullptr;
  CLI::Option* tau_opt = nullptr;
};

struct ProblemFlags {
  CLI::App* cmd = nullptr;
  CLI::Option* directions = nullptr;
  CLI::Option* weights = nullptr;
  CLI::Option* methods = nullptr;
  CLI::Option* gamma = nullptr;
  CLI::Option* zeta = nullptr;
  CLI::Option* tau = nullptr;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

bool looks_like_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n\xEF\xBB\xBF");
  return first != std::string::npos && text[first] == '{';
}

void override_criteria(json& doc, const Options& o) {
  if (!o.directions_opt->count() && !o.weights_opt->count()) return;
  if (!doc.is_object() || !doc.contains("criteria") || !doc["criteria"].is_array()) return;
  auto& criteria = doc["criteria"];
  if (o.directions_opt->count()) {
    const auto dirs = parse_direction_list(o.directions);
    if (dirs.size() != criteria.size()) {
      throw Error(ErrorCode::CountMismatch, std::to_string(dirs.size()) +
                                                " directions supplied for " +
                                                std::to_string(criteria.size()) + " criteria");
    }
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      criteria[j]["direction"] = std::string(to_string(dirs[j]));
    }
  }
  if (o.weights_opt->count()) {
    const auto w = parse_number_list(o.weights, "weight");
    if (w.size() != criteria.size()) {
      throw Error(ErrorCode::CountMismatch, std::to_string(w.size()) + " weights supplied for " +
                                                std::to_string(criteria.size()) + " criteria");
    }
    for (std::size_t j = 0; j < w.size(); ++j) criteria[j]["weight"] = w[j];
  }
}

ProblemDocument load(const Options& o) {
  const std::string text = read_input(o.input);
  ProblemDocument doc;
  if (looks_like_json(text)) {
    spdlog::debug("reading {} as a JSON problem document", o.input);
    json root = parse_json_text(text);
    override_criteria(root, o);
    doc = document_from_json(root, o.normalize_weights);
  } else {
    spdlog::debug("reading {} as CSV", o.input);
    CriteriaConfig config;
    if (!o.sidecar.empty()) config = parse_sidecar(read_input(o.sidecar));
    if (o.directions_opt->count()) config.directions = parse_direction_list(o.directions);
    if (o.weights_opt->count()) config.weights = parse_number_list(o.weights, "weight");
    config.normalize_weights = o.normalize_weights;
    doc.problem = parse_csv(text, config);
    doc.methods.assign(kAllMethods.begin(), kAllMethods.end());
  }

  if (o.methods_opt->count()) doc.methods = parse_method_list(o.methods);
  if (o.gamma_opt->count()) doc.params.vikor_gamma = o.gamma;
  if (o.zeta_opt->count()) doc.params.gra_zeta = o.zeta;
  if (o.tau_opt->count()) doc.params.codas_tau = o.tau;
  if (!o.gra_variant.empty()) doc.params.gra_variant = *parse_gra_variant(o.gra_variant);
  auto issues = validate_params(doc.params);
  if (!issues.empty()) throw Error(std::move(issues));
  spdlog::info("loaded {} alternatives x {} criteria, {} method(s)", doc.problem.num_alternatives(),
               doc.problem.num_criteria(), doc.methods.size());
  return doc;
}

void emit(std::ostream& out, const Options& o, const json& value, const std::string& table) {
  if (o.format == "json") {
    out << dump_json(value) << '\n';
  } else {
    out << table;
  }
}

void cmd_rank(const Options& o, std::ostream& out) {
  const auto doc = load(o);
  std::vector<MethodResult> results;
  std::vector<Issue> issues;
  for (Method m : doc.methods) {
    try {
      results.push_back(run_method(m, doc.problem, doc.params));
    } catch (const Error& e) {
      for (auto issue : e.issues()) {
        issue.message = std::string(method_id(m)) + ": " + issue.message;
        issues.push_back(std::move(issue));
      }
    }
  }
  if (!issues.empty()) throw Error(std::move(issues));
  emit(out, o, rank_document(doc.problem, results), format_rank_table(doc.problem, results));
}

void cmd_compare(const Options& o, std::ostream& out) {
  const auto doc = load(o);
  const auto report = compare_methods(doc.problem, doc.methods, doc.params);
  emit(out, o, to_json(report), format_comparison(report));
}

void cmd_reversal(const Options& o, std::ostream& out) {
  const auto doc = load(o);
  std::vector<std::vector<std::string>> drops;
  for (const auto& d : o.drops) drops.push_back(split_list(d));
  if (drops.empty()) {
    for (const auto& label : doc.problem.alternatives) drops.push_back({label});
  }
  const auto reports = rank_reversal_probe(doc.problem, doc.methods, doc.params, drops);
  emit(out, o, to_json(reports), format_reversal(reports));
}

void cmd_sweep(const Options& o, std::ostream& out) {
  const auto doc = load(o);
  std::vector<Method> methods;
  if (o.methods_opt->count()) methods = doc.methods;
  const auto plan = make_sweep_plan(doc, o.sweep_param,
                                    o.grid.empty() ? std::vector<double>{}
                                                   : parse_number_list(o.grid, "grid"),
                                    methods);
  json tables = json::array();
  std::string text;
  for (Method m : plan.methods) {
    const auto table = sensitivity_sweep(doc.problem, m, plan.settings);
    tables.push_back(to_json(table));
    if (!text.empty()) text += '\n';
    text += format_sweep(table);
  }
  emit(out, o, {{"sweeps", std::move(tables)}}, text);
}

int cmd_serve(const Options& o, std::ostream& out, std::ostream& err) {
  service::Server server({o.bind, o.port, o.static_dir});
  const int port = server.bind();
  if (port < 0) {
    err << "error: cannot bind " << o.bind << ":" << o.port << '\n';
    return 1;
  }
  out << "listening on http://" << o.bind << ":" << port << std::endl;
  return server.listen() ? 0 : 1;
}

ProblemFlags add_problem_options(CLI::App* cmd, Options& o) {
  ProblemFlags flags;
  flags.cmd = cmd;
  cmd->add_option("-i,--input", o.input, "Problem file: CSV or JSON document, '-' for stdin")
      ->required();
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  flags.directions =
      cmd->add_option("--directions", o.directions, "Comma-separated max/min per criterion");
  flags.weights = cmd->add_option("--weights", o.weights, "Comma-separated criterion weights");
  cmd->add_option("--sidecar", o.sidecar, "JSON criteria config for CSV input")
      ->check(CLI::ExistingFile);
  cmd->add_flag("--normalize-weights", o.normalize_weights, "Divide weights by their sum");
  flags.methods = cmd->add_option("--methods", o.methods, "Comma-separated method ids or 'all'");
  flags.gamma = cmd->add_option("--gamma", o.gamma, "VIKOR strategy weight in [0, 1]");
  flags.zeta = cmd->add_option("--zeta", o.zeta, "GRA distinguishing coefficient in (0, 1]");
  flags.tau = cmd->add_option("--tau", o.tau, "CODAS threshold in [0.01, 0.05]");
  cmd->add_option("--gra-variant", o.gra_variant, "GRA variant")
      ->check(CLI::IsMember({"unweighted", "weighted"}));
  return flags;
}

bool has_code(const Error& e, ErrorCode code) {
  return std::any_of(e.issues().begin(), e.issues().end(),
                     [&](const Issue& i) { return i.code == code; });
}

}  // namespace

void configure_logging() {
  static bool done = false;
  if (!done) {
    auto logger = spdlog::stderr_color_mt("mcdm");
    spdlog::set_default_logger(logger);
    done = true;
  }
  const char* env = std::getenv("MCDM_LOG");
  spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  configure_logging();

  CLI::App app{"Rank alternatives with reference-type MCDM methods", "mcdm"};
  app.require_subcommand(1);
  Options o;

  auto* rank = app.add_subcommand("rank", "Score and rank with each selected method");
  auto* compare = app.add_subcommand("compare", "Rank table, top choices and Spearman matrix");
  auto* reversal = app.add_subcommand("reversal", "Rank-reversal probe under alternative removal");
  auto* sweep = app.add_subcommand("sweep", "Sensitivity of rankings to a parameter or weight");
  auto* serve = app.add_subcommand("serve", "Start the stateless HTTP JSON service");
  std::vector<ProblemFlags> flag_sets;
  for (auto* cmd : {rank, compare, reversal, sweep}) flag_sets.push_back(add_problem_options(cmd, o));
  reversal->add_option("--drop", o.drops,
                       "Labels to remove together (comma-separated); repeat for more probes");
  sweep->add_option("--sweep-param", o.sweep_param, "gamma, zeta, tau or weight:NAME")
      ->capture_default_str();
  sweep->add_option("--grid", o.grid, "Comma-separated values to sweep");
  serve->add_option("--port", o.port, "TCP port, 0 for any free port")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  serve->add_option("--bind", o.bind, "Address to bind")->capture_default_str();
  serve->add_option("--static-dir", o.static_dir, "Directory served at /");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (const auto& flags : flag_sets) {
    if (!flags.cmd->parsed()) continue;
    o.directions_opt = flags.directions;
    o.weights_opt = flags.weights;
    o.methods_opt = flags.methods;
    o.gamma_opt = flags.gamma;
    o.zeta_opt = flags.zeta;
    o.tau_opt = flags.tau;
  }

  try {
    if (rank->parsed()) cmd_rank(o, out);
    if (compare->parsed()) cmd_compare(o, out);
    if (reversal->parsed()) cmd_reversal(o, out);
    if (sweep->parsed()) cmd_sweep(o, out);
    if (serve->parsed()) return cmd_serve(o, out, err);
  } catch (const Error& e) {
    if (has_code(e, ErrorCode::CountMismatch)) {
      err << "usage error: the supplied lists do not match the criteria\n" << format_issues(e.issues());
      err << "Run with --help for usage.\n";
      return 2;
    }
    err << format_issues(e.issues());
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mcdm::cli
