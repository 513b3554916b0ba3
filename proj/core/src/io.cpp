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

#include "mcdm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace mcdm {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Issue parse_issue(std::size_t line, std::optional<std::size_t> field, std::string message) {
  return {ErrorCode::ParseError, {.row = line, .column = field, .pointer = {}}, std::move(message)};
}

struct CsvField {
  std::string text;
  bool quoted = false;
};

// Splits one record. Quoted fields may contain commas; a doubled quote is a
// literal quote. Returns false on an unterminated quote.
bool split_record(std::string_view line, std::vector<CsvField>& fields) {
  fields.clear();
  CsvField current;
  bool in_quotes = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (in_quotes) {
      if (c == '"') {
        if (k + 1 < line.size() && line[k + 1] == '"') {
          current.text.push_back('"');
          ++k;
        } else {
          in_quotes = false;
        }
      } else {
        current.text.push_back(c);
      }
    } else if (c == '"' && trim(current.text).empty()) {
      current.text.clear();
      current.quoted = true;
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current = {};
    } else {
      current.text.push_back(c);
    }
  }
  fields.push_back(std::move(current));
  return !in_quotes;
}

std::string ids_list() {
  std::string out;
  for (Method m : kAllMethods) {
    if (!out.empty()) out += ", ";
    out += method_id(m);
  }
  return out;
}

Issue unknown_method(std::string_view id, std::string pointer = {}) {
  return {ErrorCode::UnknownMethod,
          {.row = {}, .column = {}, .pointer = std::move(pointer)},
          "unknown method id '" + std::string(id) + "'; valid ids are " + ids_list()};
}

}  // namespace

std::optional<double> parse_decimal(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  // from_chars would also take "inf" and "nan"; the grammar only has digits.
  for (char c : text) {
    const bool ok = (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == 'e' ||
                    c == 'E';
    if (!ok) return std::nullopt;
  }
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
  return value;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start));
    if (!piece.empty()) items.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

std::vector<Direction> parse_direction_list(std::string_view text) {
  std::vector<Direction> out;
  for (const auto& item : split_list(text)) {
    const auto d = parse_direction(item);
    if (!d) {
      throw Error(ErrorCode::ParseError,
                  "direction '" + item + "' is not one of max, min");
    }
    out.push_back(*d);
  }
  return out;
}

std::vector<double> parse_number_list(std::string_view text, std::string_view what) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) {
    const auto v = parse_decimal(item);
    if (!v) {
      throw Error(ErrorCode::ParseError,
                  std::string(what) + " entry '" + item + "' is not a dot-decimal number");
    }
    out.push_back(*v);
  }
  return out;
}

std::vector<Method> parse_method_list(std::string_view text) {
  if (trim(text) == "all") return {kAllMethods.begin(), kAllMethods.end()};
  std::vector<Method> out;
  std::vector<Issue> issues;
  for (const auto& item : split_list(text)) {
    if (const auto m = parse_method(item)) {
      if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
    } else {
      issues.push_back(unknown_method(item));
    }
  }
  if (!issues.empty()) throw Error(std::move(issues));
  if (out.empty()) throw Error(ErrorCode::ParseError, "no methods selected");
  return out;
}

DecisionProblem parse_csv(std::string_view text, const CriteriaConfig& config) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<Issue> issues;
  std::vector<std::vector<CsvField>> records;
  std::vector<std::size_t> line_numbers;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto newline = text.find('\n', start);
    const auto line = text.substr(start, newline == std::string_view::npos
                                             ? std::string_view::npos
                                             : newline - start);
    ++line_no;
    start = newline == std::string_view::npos ? text.size() : newline + 1;
    if (trim(line).empty()) continue;
    std::vector<CsvField> fields;
    if (!split_record(line, fields)) {
      issues.push_back(parse_issue(line_no, {}, "unterminated quoted field on line " +
                                                    std::to_string(line_no)));
      continue;
    }
    records.push_back(std::move(fields));
    line_numbers.push_back(line_no);
  }
  if (!issues.empty()) throw Error(std::move(issues));
  if (records.empty()) throw Error(ErrorCode::ParseError, "input is empty; a header row is required");

  DecisionProblem problem;
  const auto& header = records.front();
  const std::size_t width = header.size();
  for (std::size_t j = 1; j < width; ++j) {
    problem.criteria.push_back({std::string(trim(header[j].text)), Direction::Maximize, 0.0});
  }
  const std::size_t n = problem.criteria.size();

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& record = records[r];
    const std::size_t line = line_numbers[r];
    if (record.size() != width) {
      issues.push_back(parse_issue(line, {},
                                   "line " + std::to_string(line) + " has " +
                                       std::to_string(record.size()) + " fields, the header has " +
                                       std::to_string(width)));
      continue;
    }
    const auto label = trim(record[0].text);
    if (label.empty()) {
      issues.push_back(parse_issue(line, 1, "line " + std::to_string(line) + " has an empty label"));
    }
    std::vector<double> row;
    for (std::size_t j = 1; j < width; ++j) {
      const auto value = parse_decimal(record[j].text);
      if (!value) {
        issues.push_back(parse_issue(line, j + 1,
                                     "cell '" + record[j].text + "' at line " +
                                         std::to_string(line) + ", field " +
                                         std::to_string(j + 1) +
                                         " is not a dot-decimal number"));
        row.push_back(0.0);
      } else {
        row.push_back(*value);
      }
    }
    problem.alternatives.emplace_back(label);
    problem.values.push_back(std::move(row));
  }
  if (!issues.empty()) throw Error(std::move(issues));

  if (config.directions.size() != n) {
    issues.push_back({ErrorCode::CountMismatch, {},
                      std::to_string(config.directions.size()) + " directions supplied for " +
                          std::to_string(n) + " criteria"});
  }
  if (config.weights.size() != n) {
    issues.push_back({ErrorCode::CountMismatch, {},
                      std::to_string(config.weights.size()) + " weights supplied for " +
                          std::to_string(n) + " criteria"});
  }
  if (!config.names.empty()) {
    if (config.names.size() != n) {
      issues.push_back({ErrorCode::CountMismatch, {},
                        std::to_string(config.names.size()) + " criterion names supplied for " +
                            std::to_string(n) + " criteria"});
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        if (config.names[j] != problem.criteria[j].name) {
          issues.push_back({ErrorCode::SchemaViolation,
                            {.row = {}, .column = j + 1, .pointer = "/criteria/" + std::to_string(j) + "/name"},
                            "criterion " + std::to_string(j + 1) + " is '" +
                                problem.criteria[j].name + "' in the CSV header but '" +
                                config.names[j] + "' in the criteria config"});
        }
      }
    }
  }
  if (!issues.empty()) throw Error(std::move(issues));

  for (std::size_t j = 0; j < n; ++j) {
    problem.criteria[j].direction = config.directions[j];
    problem.criteria[j].weight = config.weights[j];
  }
  if (config.normalize_weights) problem = with_normalized_weights(std::move(problem));
  require_valid(problem);
  return problem;
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                std::string("malformed JSON: ") + e.what(),
                {.row = {}, .column = e.byte, .pointer = {}});
  }
}

namespace {

void schema(std::vector<Issue>& issues, std::string pointer, std::string message) {
  issues.push_back({ErrorCode::SchemaViolation,
                    {.row = {}, .column = {}, .pointer = std::move(pointer)},
                    std::move(message)});
}

std::vector<std::string> string_array(const json& node, const std::string& pointer,
                                      std::vector<Issue>& issues) {
  std::vector<std::string> out;
  if (!node.is_array()) {
    schema(issues, pointer, "expected an array of strings");
    return out;
  }
  for (std::size_t k = 0; k < node.size(); ++k) {
    if (!node[k].is_string()) {
      schema(issues, pointer + "/" + std::to_string(k), "expected a string");
    } else {
      out.push_back(node[k].get<std::string>());
    }
  }
  return out;
}

}  // namespace

ProblemDocument document_from_json(const json& doc, bool normalize_weights) {
  std::vector<Issue> issues;
  ProblemDocument out;
  out.methods.assign(kAllMethods.begin(), kAllMethods.end());

  if (!doc.is_object()) {
    schema(issues, "", "document must be a JSON object");
    throw Error(std::move(issues));
  }

  if (!doc.contains("alternatives")) {
    schema(issues, "/alternatives", "required member is missing");
  } else {
    out.problem.alternatives = string_array(doc["alternatives"], "/alternatives", issues);
  }

  if (!doc.contains("criteria")) {
    schema(issues, "/criteria", "required member is missing");
  } else if (!doc["criteria"].is_array()) {
    schema(issues, "/criteria", "expected an array of criterion objects");
  } else {
    const auto& criteria = doc["criteria"];
    for (std::size_t j = 0; j < criteria.size(); ++j) {
      const std::string base = "/criteria/" + std::to_string(j);
      const auto& c = criteria[j];
      if (!c.is_object()) {
        schema(issues, base, "expected an object with name, direction and weight");
        continue;
      }
      CriterionSpec spec;
      if (!c.contains("name") || !c["name"].is_string()) {
        schema(issues, base + "/name", "expected a string");
      } else {
        spec.name = c["name"].get<std::string>();
      }
      if (!c.contains("direction") || !c["direction"].is_string()) {
        schema(issues, base + "/direction", "expected \"max\" or \"min\"");
      } else {
        const auto d = c["direction"].get<std::string>();
        if (d == "max") {
          spec.direction = Direction::Maximize;
        } else if (d == "min") {
          spec.direction = Direction::Minimize;
        } else {
          schema(issues, base + "/direction", "expected \"max\" or \"min\", got \"" + d + "\"");
        }
      }
      if (!c.contains("weight") || !c["weight"].is_number()) {
        schema(issues, base + "/weight", "expected a number");
      } else {
        spec.weight = c["weight"].get<double>();
      }
      out.problem.criteria.push_back(std::move(spec));
    }
  }

  if (!doc.contains("values")) {
    schema(issues, "/values", "required member is missing");
  } else if (!doc["values"].is_array()) {
    schema(issues, "/values", "expected an array of rows");
  } else {
    const auto& values = doc["values"];
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::string base = "/values/" + std::to_string(i);
      if (!values[i].is_array()) {
        schema(issues, base, "expected an array of numbers");
        continue;
      }
      std::vector<double> row;
      for (std::size_t j = 0; j < values[i].size(); ++j) {
        if (!values[i][j].is_number()) {
          schema(issues, base + "/" + std::to_string(j), "expected a number");
          row.push_back(0.0);
        } else {
          row.push_back(values[i][j].get<double>());
        }
      }
      out.problem.values.push_back(std::move(row));
    }
  }

  if (doc.contains("methods")) {
    const auto& methods = doc["methods"];
    if (methods.is_string() && methods.get<std::string>() == "all") {
      // default already holds every method
    } else if (methods.is_array()) {
      out.methods.clear();
      for (std::size_t k = 0; k < methods.size(); ++k) {
        const std::string pointer = "/methods/" + std::to_string(k);
        if (!methods[k].is_string()) {
          schema(issues, pointer, "expected a method id string");
          continue;
        }
        const auto id = methods[k].get<std::string>();
        if (const auto m = parse_method(id)) {
          if (std::find(out.methods.begin(), out.methods.end(), *m) == out.methods.end()) {
            out.methods.push_back(*m);
          }
        } else {
          issues.push_back(unknown_method(id, pointer));
        }
      }
      if (methods.empty()) schema(issues, "/methods", "at least one method is required");
    } else {
      schema(issues, "/methods", "expected an array of method ids or \"all\"");
    }
  }

  if (doc.contains("params")) {
    const auto& params = doc["params"];
    if (!params.is_object()) {
      schema(issues, "/params", "expected an object");
    } else {
      for (const auto& [key, value] : params.items()) {
        const std::string pointer = "/params/" + key;
        if (key == "gamma" || key == "zeta" || key == "tau") {
          if (!value.is_number()) {
            schema(issues, pointer, "expected a number");
            continue;
          }
          const double v = value.get<double>();
          if (key == "gamma") out.params.vikor_gamma = v;
          if (key == "zeta") out.params.gra_zeta = v;
          if (key == "tau") out.params.codas_tau = v;
        } else if (key == "gra_variant") {
          const auto variant =
              value.is_string() ? parse_gra_variant(value.get<std::string>()) : std::nullopt;
          if (!variant) {
            schema(issues, pointer, "expected \"unweighted\" or \"weighted\"");
          } else {
            out.params.gra_variant = *variant;
          }
        } else {
          schema(issues, pointer, "unknown parameter; expected gamma, zeta, tau or gra_variant");
        }
      }
    }
  }

  if (!issues.empty()) throw Error(std::move(issues));

  if (normalize_weights) out.problem = with_normalized_weights(std::move(out.problem));
  issues = validate_problem(out.problem);
  auto param_issues = validate_params(out.params);
  issues.insert(issues.end(), param_issues.begin(), param_issues.end());
  if (!issues.empty()) throw Error(std::move(issues));
  return out;
}

ProblemDocument parse_json(std::string_view text, bool normalize_weights) {
  return document_from_json(parse_json_text(text), normalize_weights);
}

CriteriaConfig parse_sidecar(std::string_view text) {
  const json doc = parse_json_text(text);
  std::vector<Issue> issues;
  CriteriaConfig config;
  if (!doc.is_object()) {
    schema(issues, "", "criteria config must be a JSON object");
    throw Error(std::move(issues));
  }
  if (doc.contains("criteria")) {
    const auto& criteria = doc["criteria"];
    if (!criteria.is_array()) {
      schema(issues, "/criteria", "expected an array of criterion objects");
    } else {
      for (std::size_t j = 0; j < criteria.size(); ++j) {
        const std::string base = "/criteria/" + std::to_string(j);
        const auto& c = criteria[j];
        if (!c.is_object()) {
          schema(issues, base, "expected an object");
          continue;
        }
        if (c.contains("name")) {
          if (c["name"].is_string()) {
            config.names.push_back(c["name"].get<std::string>());
          } else {
            schema(issues, base + "/name", "expected a string");
          }
        }
        const auto d = c.contains("direction") && c["direction"].is_string()
                           ? parse_direction(c["direction"].get<std::string>())
                           : std::nullopt;
        if (!d) {
          schema(issues, base + "/direction", "expected \"max\" or \"min\"");
        } else {
          config.directions.push_back(*d);
        }
        if (!c.contains("weight") || !c["weight"].is_number()) {
          schema(issues, base + "/weight", "expected a number");
        } else {
          config.weights.push_back(c["weight"].get<double>());
        }
      }
      if (!config.names.empty() && config.names.size() != criteria.size()) {
        schema(issues, "/criteria", "either every criterion has a name or none does");
      }
    }
  } else {
    if (doc.contains("directions")) {
      for (const auto& item : string_array(doc["directions"], "/directions", issues)) {
        if (const auto d = parse_direction(item)) {
          config.directions.push_back(*d);
        } else {
          schema(issues, "/directions", "direction '" + item + "' is not one of max, min");
        }
      }
    }
    if (doc.contains("weights")) {
      const auto& weights = doc["weights"];
      if (!weights.is_array()) {
        schema(issues, "/weights", "expected an array of numbers");
      } else {
        for (std::size_t k = 0; k < weights.size(); ++k) {
          if (!weights[k].is_number()) {
            schema(issues, "/weights/" + std::to_string(k), "expected a number");
          } else {
            config.weights.push_back(weights[k].get<double>());
          }
        }
      }
    }
  }
  if (!issues.empty()) throw Error(std::move(issues));
  return config;
}

json to_json(const Issue& issue) {
  json location = json::object();
  if (issue.location.row) location["row"] = *issue.location.row;
  if (issue.location.column) location["column"] = *issue.location.column;
  if (!issue.location.pointer.empty()) location["pointer"] = issue.location.pointer;
  return {{"code", std::string(to_string(issue.code))},
          {"location", std::move(location)},
          {"message", issue.message}};
}

json errors_to_json(const std::vector<Issue>& issues) {
  json list = json::array();
  for (const auto& issue : issues) list.push_back(to_json(issue));
  return {{"errors", std::move(list)}};
}

namespace {

json params_json(const MethodParams& params) {
  return {{"gamma", params.vikor_gamma},
          {"zeta", params.gra_zeta},
          {"tau", params.codas_tau},
          {"gra_variant", std::string(to_string(params.gra_variant))}};
}

json method_ids(const std::vector<Method>& methods) {
  json out = json::array();
  for (Method m : methods) out.push_back(std::string(method_id(m)));
  return out;
}

json diagnostic_json(const Diagnostic& value) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Matrix>) {
          return v.to_rows();
        } else {
          return v;
        }
      },
      value);
}

std::vector<std::string> ranking_labels(const std::vector<std::string>& alternatives,
                                        const std::vector<int>& ranks) {
  std::vector<std::string> out;
  for (std::size_t idx : order_by_rank(ranks)) out.push_back(alternatives[idx]);
  return out;
}

}  // namespace

json to_json(const ProblemDocument& document) {
  json criteria = json::array();
  for (const auto& c : document.problem.criteria) {
    criteria.push_back({{"name", c.name},
                        {"direction", std::string(to_string(c.direction))},
                        {"weight", c.weight}});
  }
  return {{"alternatives", document.problem.alternatives},
          {"criteria", std::move(criteria)},
          {"values", document.problem.values},
          {"methods", method_ids(document.methods)},
          {"params", params_json(document.params)}};
}

json to_json(const MethodResult& result) {
  json diagnostics = json::object();
  json out = {{"method", std::string(method_id(result.method))},
              {"orientation", std::string(to_string(result.orientation))},
              {"scores", result.scores},
              {"ranks", result.ranks}};
  for (const auto& [name, value] : result.diagnostics) {
    if (name == "compromise_set") {
      out["compromise_set"] = diagnostic_json(value);
    } else {
      diagnostics[name] = diagnostic_json(value);
    }
  }
  out["diagnostics"] = std::move(diagnostics);
  return out;
}

json rank_document(const DecisionProblem& problem, const std::vector<MethodResult>& results) {
  json out = {{"alternatives", problem.alternatives}};
  for (const auto& result : results) {
    json entry = to_json(result);
    entry["ranking"] = ranking_labels(problem.alternatives, result.ranks);
    out[std::string(method_id(result.method))] = std::move(entry);
  }
  return out;
}

json to_json(const ComparisonReport& report) {
  json top = json::object();
  json results = json::object();
  for (std::size_t k = 0; k < report.methods.size(); ++k) {
    const std::string id(method_id(report.methods[k]));
    top[id] = report.top_choices[k];
    json entry = to_json(report.results[k]);
    entry["ranking"] = ranking_labels(report.alternatives, report.results[k].ranks);
    results[id] = std::move(entry);
  }
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"method", std::string(method_id(f.method))},
                        {"errors", errors_to_json(f.issues)["errors"]}});
  }
  return {{"alternatives", report.alternatives},
          {"methods", method_ids(report.methods)},
          {"rank_table", report.rank_table},
          {"top_choices", std::move(top)},
          {"correlations", report.correlations},
          {"results", std::move(results)},
          {"failures", std::move(failures)}};
}

json to_json(const std::vector<ReversalReport>& reports) {
  json list = json::array();
  for (const auto& report : reports) {
    json methods = json::array();
    for (const auto& entry : report.methods) {
      json flips = json::array();
      for (const auto& flip : entry.flips) {
        flips.push_back({{"first", flip.first},
                         {"second", flip.second},
                         {"before", std::string(to_string(flip.before))},
                         {"after", std::string(to_string(flip.after))}});
      }
      methods.push_back({{"method", std::string(method_id(entry.method))},
                         {"evaluated", entry.evaluated},
                         {"errors", errors_to_json(entry.issues)["errors"]},
                         {"ranks_before", entry.ranks_before},
                         {"ranks_after", entry.ranks_after},
                         {"affected", entry.affected()},
                         {"flips", std::move(flips)}});
    }
    list.push_back({{"removed", report.removed},
                    {"perturbation", report.perturbation},
                    {"survivors", report.survivors},
                    {"methods", std::move(methods)}});
  }
  return {{"reversals", std::move(list)}};
}

json to_json(const SweepTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json entry = {{"label", row.setting.label},
                  {"params", params_json(row.setting.params)},
                  {"evaluated", row.evaluated},
                  {"errors", errors_to_json(row.issues)["errors"]},
                  {"scores", row.scores},
                  {"ranks", row.ranks},
                  {"top_choice", row.top_choice},
                  {"top_changed", row.top_changed}};
    if (!row.setting.weights.empty()) entry["weights"] = row.setting.weights;
    rows.push_back(std::move(entry));
  }
  return {{"method", std::string(method_id(table.method))},
          {"alternatives", table.alternatives},
          {"rows", std::move(rows)}};
}

namespace {

void write_number(double v, std::string& out) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  if (v == 0.0 && std::signbit(v)) {
    // "-0" would come back as the integer 0.
    out += "-0.0";
    return;
  }
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  out.append(buf, res.ptr);
}

void write_string(const std::string& s, std::string& out) {
  out += json(s).dump(-1, ' ', false, json::error_handler_t::replace);
}

void newline(std::string& out, int indent, int level) {
  if (indent < 0) return;
  out.push_back('\n');
  out.append(static_cast<std::size_t>(indent * level), ' ');
}

void write_value(const json& v, std::string& out, int indent, int level) {
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out.push_back('{');
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        newline(out, indent, level + 1);
        write_string(it.key(), out);
        out += indent < 0 ? ":" : ": ";
        write_value(it.value(), out, indent, level + 1);
      }
      newline(out, indent, level);
      out.push_back('}');
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::none_of(v.begin(), v.end(), [](const json& item) {
        return item.is_structured();
      });
      if (flat) {
        out.push_back('[');
        bool first = true;
        for (const auto& item : v) {
          if (!first) out += indent < 0 ? "," : ", ";
          first = false;
          write_value(item, out, indent, level + 1);
        }
        out.push_back(']');
        return;
      }
      out.push_back('[');
      bool first = true;
      for (const auto& item : v) {
        if (!first) out.push_back(',');
        first = false;
        newline(out, indent, level + 1);
        write_value(item, out, indent, level + 1);
      }
      newline(out, indent, level);
      out.push_back(']');
      return;
    }
    case json::value_t::number_float:
      write_number(v.get<double>(), out);
      return;
    case json::value_t::string:
      write_string(v.get_ref<const std::string&>(), out);
      return;
    default:
      out += v.dump();
      return;
  }
}

std::string fixed4(double v) {
  if (std::abs(v) < 5e-5) v = 0.0;
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

std::size_t label_width(const std::vector<std::string>& labels, std::size_t floor) {
  std::size_t w = floor;
  for (const auto& l : labels) w = std::max(w, l.size());
  return w + 2;
}

}  // namespace

std::string dump_json(const json& value, int indent) {
  std::string out;
  write_value(value, out, indent, 0);
  return out;
}

std::string format_issues(const std::vector<Issue>& issues) {
  std::ostringstream os;
  for (const auto& issue : issues) {
    os << "error: " << to_string(issue.code);
    if (issue.location.row) os << " row " << *issue.location.row;
    if (issue.location.column) os << " column " << *issue.location.column;
    if (!issue.location.pointer.empty()) os << " at " << issue.location.pointer;
    os << ": " << issue.message << '\n';
  }
  return os.str();
}

std::string format_rank_table(const DecisionProblem& problem,
                              const std::vector<MethodResult>& results) {
  std::ostringstream os;
  const std::size_t w = label_width(problem.alternatives, 11);
  bool first = true;
  for (const auto& result : results) {
    if (!first) os << '\n';
    first = false;
    os << method_id(result.method) << " (" << to_string(result.orientation) << ")\n";
    os << std::left << std::setw(static_cast<int>(w)) << "alternative" << std::right
       << std::setw(10) << "score" << std::setw(6) << "rank" << '\n';
    for (std::size_t i = 0; i < problem.num_alternatives(); ++i) {
      os << std::left << std::setw(static_cast<int>(w)) << problem.alternatives[i] << std::right
         << std::setw(10) << fixed4(result.scores[i]) << std::setw(6) << result.ranks[i] << '\n';
    }
    os << "ranking:";
    for (const auto& label : ranking_labels(problem.alternatives, result.ranks)) os << ' ' << label;
    os << '\n';
    if (result.diagnostics.count("compromise_set")) {
      os << "compromise set:";
      for (const auto& label : result.labels("compromise_set")) os << ' ' << label;
      os << '\n';
    }
  }
  return os.str();
}

std::string format_comparison(const ComparisonReport& report) {
  std::ostringstream os;
  const std::size_t w = label_width(report.alternatives, 11);
  os << std::left << std::setw(static_cast<int>(w)) << "alternative" << std::right;
  for (Method m : report.methods) os << std::setw(8) << method_id(m);
  os << '\n';
  for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
    os << std::left << std::setw(static_cast<int>(w)) << report.alternatives[i] << std::right;
    for (int rank : report.rank_table[i]) os << std::setw(8) << rank;
    os << '\n';
  }
  os << std::left << std::setw(static_cast<int>(w)) << "top" << std::right;
  for (const auto& top : report.top_choices) os << std::setw(8) << top;
  os << "\n\nspearman\n";
  os << std::setw(8) << "";
  for (Method m : report.methods) os << std::setw(8) << method_id(m);
  os << '\n';
  for (std::size_t a = 0; a < report.methods.size(); ++a) {
    os << std::left << std::setw(8) << method_id(report.methods[a]) << std::right;
    for (double rho : report.correlations[a]) os << std::setw(8) << fixed4(rho);
    os << '\n';
  }
  for (const auto& f : report.failures) {
    os << '\n' << method_id(f.method) << " failed\n" << format_issues(f.issues);
  }
  return os.str();
}

std::string format_reversal(const std::vector<ReversalReport>& reports) {
  std::ostringstream os;
  bool first = true;
  for (const auto& report : reports) {
    if (!first) os << '\n';
    first = false;
    os << report.perturbation << '\n';
    for (const auto& entry : report.methods) {
      os << "  " << std::left << std::setw(8) << method_id(entry.method) << std::right;
      if (!entry.evaluated) {
        os << "not evaluated\n";
        for (const auto& issue : entry.issues) os << "    " << to_string(issue.code) << ": " << issue.message << '\n';
        continue;
      }
      if (!entry.affected()) {
        os << "no flips\n";
        continue;
      }
      os << entry.flips.size() << " flipped pair(s)\n";
      for (const auto& flip : entry.flips) {
        os << "    " << flip.first << " / " << flip.second << ": " << to_string(flip.before)
           << " -> " << to_string(flip.after) << '\n';
      }
    }
  }
  return os.str();
}

std::string format_sweep(const SweepTable& table) {
  std::ostringstream os;
  std::size_t w = 8;
  for (const auto& row : table.rows) w = std::max(w, row.setting.label.size());
  w += 2;
  os << method_id(table.method) << " sweep\n";
  os << std::left << std::setw(static_cast<int>(w)) << "setting" << std::right;
  for (const auto& alt : table.alternatives) os << std::setw(10) << alt;
  os << std::setw(8) << "top" << '\n';
  for (const auto& row : table.rows) {
    os << std::left << std::setw(static_cast<int>(w)) << row.setting.label << std::right;
    if (!row.evaluated) {
      os << " not evaluated: "
         << (row.issues.empty() ? std::string() : row.issues.front().message) << '\n';
      continue;
    }
    for (double s : row.scores) os << std::setw(10) << fixed4(s);
    os << std::setw(8) << row.top_choice << (row.top_changed ? "  *" : "") << '\n';
  }
  return os.str();
}

}  // namespace mcdm
