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

#include "service.hpp"

#include <algorithm>
#include <httplib.h>
#include <spdlog/spdlog.h>

#include "mcdm/analysis.hpp"
#include "mcdm/io.hpp"
#include "mcdm/methods.hpp"
#include "sweep_plan.hpp"

namespace mcdm::service {

using nlohmann::json;

namespace {

Response reply(int status, const json& body) { return {status, dump_json(body, -1) + "\n"}; }

bool is_schema_code(ErrorCode code) {
  return code == ErrorCode::SchemaViolation || code == ErrorCode::ParseError ||
         code == ErrorCode::UnknownMethod;
}

Response error_reply(const Error& e) {
  const auto& issues = e.issues();
  const bool schema = std::any_of(issues.begin(), issues.end(),
                                  [](const Issue& i) { return is_schema_code(i.code); });
  return reply(schema ? 422 : 400, errors_to_json(issues));
}

Response plain_error(int status, std::string code, std::string message) {
  json body = {{"errors", json::array({{{"code", std::move(code)},
                                        {"location", json::object()},
                                        {"message", std::move(message)}}})}};
  return reply(status, body);
}

json schema_error(const std::string& pointer, const std::string& message) {
  return {{"code", "SchemaViolation"}, {"location", {{"pointer", pointer}}}, {"message", message}};
}

json methods_catalog() {
  const MethodParams defaults;
  json methods = json::array();
  for (Method m : kAllMethods) {
    json params = json::array();
    if (m == Method::Vikor) params.push_back("gamma");
    if (m == Method::Gra) {
      params.push_back("gra_variant");
      params.push_back("zeta");
    }
    if (m == Method::Codas) params.push_back("tau");
    methods.push_back({{"id", std::string(method_id(m))},
                       {"orientation", std::string(to_string(orientation_of(m)))},
                       {"parameters", std::move(params)}});
  }
  json schemas = {
      {"gamma", {{"type", "number"}, {"minimum", 0.0}, {"maximum", 1.0}, {"default", defaults.vikor_gamma}}},
      {"zeta",
       {{"type", "number"}, {"exclusiveMinimum", 0.0}, {"maximum", 1.0}, {"default", defaults.gra_zeta}}},
      {"tau", {{"type", "number"}, {"minimum", 0.01}, {"maximum", 0.05}, {"default", defaults.codas_tau}}},
      {"gra_variant",
       {{"type", "string"},
        {"enum", {"unweighted", "weighted"}},
        {"default", std::string(to_string(defaults.gra_variant))}}}};
  return {{"methods", std::move(methods)}, {"parameters", std::move(schemas)}};
}

Response rank(const json& body) {
  const auto doc = document_from_json(body);
  std::vector<MethodResult> results;
  std::vector<Issue> issues;
  for (Method m : doc.methods) {
    try {
      results.push_back(run_method(m, doc.problem, doc.params));
    } catch (const Error& e) {
      issues.insert(issues.end(), e.issues().begin(), e.issues().end());
    }
  }
  if (!issues.empty()) throw Error(std::move(issues));
  return reply(200, rank_document(doc.problem, results));
}

Response compare(const json& body) {
  const auto doc = document_from_json(body);
  return reply(200, to_json(compare_methods(doc.problem, doc.methods, doc.params)));
}

Response reversal(const json& body) {
  const auto doc = document_from_json(body);
  std::vector<std::vector<std::string>> drops;
  if (!body.contains("drops")) {
    for (const auto& label : doc.problem.alternatives) drops.push_back({label});
  } else if (!body["drops"].is_array() || body["drops"].empty()) {
    return reply(422, {{"errors", json::array({schema_error(
                                      "/drops", "expected a non-empty array of labels or label arrays")})}});
  } else {
    const auto& list = body["drops"];
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string pointer = "/drops/" + std::to_string(k);
      if (list[k].is_string()) {
        drops.push_back({list[k].get<std::string>()});
      } else if (list[k].is_array() && !list[k].empty() &&
                 std::all_of(list[k].begin(), list[k].end(),
                             [](const json& v) { return v.is_string(); })) {
        drops.push_back(list[k].get<std::vector<std::string>>());
      } else {
        return reply(422, {{"errors", json::array({schema_error(
                                          pointer, "expected a label or an array of labels")})}});
      }
    }
  }
  return reply(200, to_json(rank_reversal_probe(doc.problem, doc.methods, doc.params, drops)));
}

Response sweep(const json& body) {
  const auto doc = document_from_json(body);
  if (!body.contains("sweep") || !body["sweep"].is_object()) {
    return reply(422, {{"errors", json::array({schema_error("/sweep", "expected a sweep object")})}});
  }
  const auto plan = sweep_plan_from_json(body["sweep"], doc);
  json tables = json::array();
  for (Method m : plan.methods) tables.push_back(to_json(sensitivity_sweep(doc.problem, m, plan.settings)));
  return reply(200, {{"sweeps", std::move(tables)}});
}

}  // namespace

Response handle_api(std::string_view method, std::string_view path, std::string_view body) {
  using Handler = Response (*)(const json&);
  static const std::pair<std::string_view, Handler> kPosts[] = {
      {"/api/v1/rank", rank},
      {"/api/v1/compare", compare},
      {"/api/v1/reversal", reversal},
      {"/api/v1/sweep", sweep},
  };

  if (path == "/api/v1/methods") {
    if (method != "GET") return plain_error(405, "MethodNotAllowed", "use GET for this route");
    return reply(200, methods_catalog());
  }
  for (const auto& [route, handler] : kPosts) {
    if (path != route) continue;
    if (method != "POST") return plain_error(405, "MethodNotAllowed", "use POST for this route");
    try {
      return handler(parse_json_text(body));
    } catch (const Error& e) {
      return error_reply(e);
    } catch (const std::exception& e) {
      spdlog::error("unexpected failure on {}: {}", path, e.what());
      return plain_error(500, "InternalError", e.what());
    }
  }
  return plain_error(404, "NotFound", "no route for " + std::string(path));
}

struct Server::Impl {
  ServerOptions options;
  httplib::Server http;
};

Server::Server(ServerOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  auto& http = impl_->http;
  auto forward = [](const httplib::Request& req, httplib::Response& res) {
    const auto out = handle_api(req.method, req.path, req.body);
    spdlog::info("{} {} -> {}", req.method, req.path, out.status);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  http.Get(R"(/api/.*)", forward);
  http.Post(R"(/api/.*)", forward);
  http.Put(R"(/api/.*)", forward);
  http.Delete(R"(/api/.*)", forward);
  if (!impl_->options.static_dir.empty() &&
      !http.set_mount_point("/", impl_->options.static_dir)) {
    spdlog::warn("static directory '{}' is not readable", impl_->options.static_dir);
  }
}

Server::~Server() { stop(); }

int Server::bind() {
  auto& http = impl_->http;
  if (impl_->options.port == 0) return http.bind_to_any_port(impl_->options.bind);
  return http.bind_to_port(impl_->options.bind, impl_->options.port) ? impl_->options.port : -1;
}

bool Server::listen() { return impl_->http.listen_after_bind(); }

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

void Server::stop() {
  if (impl_->http.is_running()) impl_->http.stop();
}

}  // namespace mcdm::service
