// Copyright 2026 The natprog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "natprog/service.hpp"

#include <algorithm>

#include "httplib.h"

namespace natprog {
namespace {

using nlohmann::json;

HttpResponse reply(int status, const json& body) {
  return HttpResponse{status,
                      body.dump(-1, ' ', false, json::error_handler_t::replace)};
}

HttpResponse bad_request(const std::string& message) {
  return reply(400, json{{"error", message}});
}

// Parses a JSON object body; nullopt (with `error` set) when malformed.
std::optional<json> parse_object(std::string_view body, std::string& error) {
  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded()) {
    error = "request body is not valid JSON";
    return std::nullopt;
  }
  if (!parsed.is_object()) {
    error = "request body must be a JSON object";
    return std::nullopt;
  }
  return parsed;
}

std::optional<std::string> string_field(const json& j, const char* key,
                                        std::string& error) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    error = std::string("'") + key + "' must be a string";
    return std::nullopt;
  }
  return j.at(key).get<std::string>();
}

HttpResponse handle_generate(const json& request) {
  if (!request.contains("templateInstance") ||
      !request.at("templateInstance").is_object()) {
    return bad_request("'templateInstance' must be an object");
  }
  TemplateInstance instance;
  try {
    instance = request.at("templateInstance").get<TemplateInstance>();
  } catch (const std::exception& e) {
    return bad_request(std::string("invalid templateInstance: ") + e.what());
  }
  std::string context;
  if (request.contains("context") && !request.at("context").is_null()) {
    if (!request.at("context").is_string()) {
      return bad_request("'context' must be a string");
    }
    context = request.at("context").get<std::string>();
  }
  const GenerateResponse response = generate(instance, context);
  return reply(response.ok ? 200 : 422, to_json(response));
}

HttpResponse handle_compile(const json& request) {
  std::string error;
  const auto source = string_field(request, "source", error);
  if (!source) return bad_request(error);
  const CompileResponse response = compile_source(*source);
  return reply(response.ok ? 200 : 422, to_json(response));
}

HttpResponse handle_run(const json& request) {
  std::string error;
  const auto source = string_field(request, "source", error);
  if (!source) return bad_request(error);
  RunRequest run;
  run.source = *source;
  if (request.contains("inputs")) {
    const json& inputs = request.at("inputs");
    if (!inputs.is_array()) return bad_request("'inputs' must be an array");
    for (const auto& item : inputs) {
      if (item.is_string()) {
        run.inputs.push_back(item.get<std::string>());
      } else if (item.is_number()) {
        run.inputs.push_back(item.dump());
      } else {
        return bad_request("'inputs' entries must be strings");
      }
    }
  }
  for (const char* key : {"stepLimit", "step_limit"}) {
    if (!request.contains(key) || request.at(key).is_null()) continue;
    const json& limit = request.at(key);
    if (!limit.is_number_integer() || limit.get<std::int64_t>() <= 0) {
      return bad_request("'stepLimit' must be a positive integer");
    }
    run.step_limit = std::min(limit.get<std::uint64_t>(), kMaxServiceStepLimit);
  }
  const RunResponse response = run_source(run);
  const bool compiled = !has_errors(response.diagnostics);
  return reply(compiled ? 200 : 422, to_json(response));
}

}  // namespace

void to_json(json& j, const Diagnostic& d) {
  j = json{{"code", d.code},
           {"severity", d.is_error() ? "error" : "warning"},
           {"message", d.message},
           {"span",
            {{"start", d.span.start_offset},
             {"end", d.span.end_offset},
             {"line", d.span.line},
             {"column", d.span.column}}},
           {"formatted", format_diagnostic(d)}};
  if (d.related_name) j["relatedName"] = *d.related_name;
}

json to_json(const CompileResponse& r) {
  json j{{"ok", r.ok}, {"diagnostics", r.diagnostics}};
  if (r.target_source) j["targetSource"] = *r.target_source;
  if (r.natural_source_echo) j["naturalSourceEcho"] = *r.natural_source_echo;
  return j;
}

json to_json(const RunResponse& r) {
  json j{{"ok", r.ok},
         {"outputs", r.outputs},
         {"diagnostics", r.diagnostics},
         {"stepsUsed", r.steps_used}};
  if (r.runtime_error) j["runtimeError"] = *r.runtime_error;
  return j;
}

json to_json(const GenerateResponse& r) {
  json j{{"ok", r.ok}, {"diagnostics", r.diagnostics}};
  if (r.text) j["text"] = *r.text;
  return j;
}

HttpResponse handle_request(std::string_view method, std::string_view path,
                            std::string_view body) {
  if (body.size() > kMaxRequestBody) {
    return reply(413, json{{"error", "request body exceeds 1 MiB"}});
  }
  if (path == "/api/templates") {
    if (method != "GET") return reply(405, json{{"error", "use GET"}});
    return reply(200, catalog_json(catalog()));
  }
  using Handler = HttpResponse (*)(const json&);
  Handler handler = nullptr;
  if (path == "/api/generate") handler = handle_generate;
  if (path == "/api/compile") handler = handle_compile;
  if (path == "/api/run") handler = handle_run;
  if (handler == nullptr) return reply(404, json{{"error", "not found"}});
  if (method != "POST") return reply(405, json{{"error", "use POST"}});
  std::string error;
  const auto request = parse_object(body, error);
  if (!request) return bad_request(error);
  return handler(*request);
}

void mount_routes(httplib::Server& server,
                  const std::optional<std::string>& static_dir) {
  server.set_payload_max_length(kMaxRequestBody);
  auto forward = [](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse out = handle_request(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  server.Get("/api/templates", forward);
  server.Post("/api/generate", forward);
  server.Post("/api/compile", forward);
  server.Post("/api/run", forward);
  if (static_dir) server.set_mount_point("/", *static_dir);
}

bool serve(const std::string& host, int port,
           const std::optional<std::string>& static_dir) {
  httplib::Server server;
  mount_routes(server, static_dir);
  return server.listen(host, port);
}

}  // namespace natprog
